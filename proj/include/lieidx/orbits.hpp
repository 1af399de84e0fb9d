#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieidx/centralize.hpp"

namespace lieidx {

/// Parts in decreasing order, all positive.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws InputError on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  /// Number of parts equal to k.
  int multiplicity(int k) const;
  /// Part i (0-based), or 0 past the end.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Partition dual() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Size of the defining matrices: l+1, 2l+1, 2l, 2l for A, B, C, D.
int natural_dim(char type, int rank);

/// Jordan types of nilpotent elements in the classical algebra: any
/// partition for A; even parts with even multiplicity for B and D; odd
/// parts with even multiplicity for C.
bool valid_for(char type, int rank, const Partition& p);

/// Rigidity in types B and D: the smallest part is 1, consecutive parts
/// differ by at most 1, and no odd part occurs exactly twice.
bool rigid_bd(const Partition& p, char type);

/// False exactly when n_1 and n_2 are odd and n_3 < n_2 (missing parts count as 0).
bool powers_generate_center_bd(const Partition& p);

/// dim g - dim l + dim O_l; the dimension of the induced orbit.
long induced_dim(long dim_g, long dim_levi, long dim_orbit_in_levi);

/// dim g^e from the partition alone.
std::size_t centralizer_dim_formula(char type, const Partition& p);

/// so_n and sp_2l preserve the form X^T F + F X = 0 with F the antidiagonal
/// J (so) or [[0, J], [-J, 0]] (sp); sl_n has no form.
class ClassicalRealization {
 public:
  ClassicalRealization(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::size_t n() const { return n_; }
  const LieAlgebra& algebra() const { return *algebra_; }
  const std::vector<RatMatrix>& basis() const { return basis_; }
  /// Identity for type A.
  const RatMatrix& form() const { return form_; }

  RatMatrix to_matrix(const Element& a) const;
  /// Throws InputError if m is not in the algebra.
  Element from_matrix(const RatMatrix& m) const;
  /// Projection of gl_n onto the algebra along its natural complement.
  RatMatrix project(const RatMatrix& m) const;

 private:
  char type_;
  int rank_;
  std::size_t n_;
  RatMatrix form_;
  RatMatrix form_inv_;
  std::vector<RatMatrix> basis_;
  // coordinates of m: sum_k m[pivot_k] * transform_[k]
  std::vector<std::size_t> pivots_;
  std::vector<RatVector> transform_;
  std::unique_ptr<LieAlgebra> algebra_;
};

/// Nilpotent element with Jordan type p compatible with the form.
/// Throws InputError if p is not valid for the type.
Element nilpotent_from_partition(const ClassicalRealization& r, const Partition& p);

/// Jordan type of a nilpotent matrix, read off the ranks of its powers.
Partition jordan_type(const RatMatrix& nilpotent);

/// z(g^e) equals the span of the projected powers e, e^2, ...
bool center_powers_check(const ClassicalRealization& r, const Element& e);

/// Sum of root vectors x_beta over the listed positive roots.
Element root_vector_sum(const LieAlgebra& L, const std::vector<IntVector>& roots);

/// One block of an orbit table.
struct OrbitRecord {
  char type = 'A';
  int rank = 1;
  std::string label;
  std::optional<Partition> partition;
  std::vector<IntVector> roots;
  std::size_t dim_centralizer = 0;
  std::size_t dim_center = 0;
  bool rigid = false;
  /// Coordinates over the canonical basis of g^e.
  std::optional<RatVector> torus_t;
  std::vector<RatVector> torus_t1;
  std::optional<std::size_t> dim_le;
  std::optional<int> condition;
  /// First line of the block in its source, 0 if not parsed.
  std::size_t line = 0;

  friend bool operator==(const OrbitRecord& a, const OrbitRecord& b);
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::vector<OrbitRecord> parse_orbit_table(std::istream& in, const std::string& source = "<input>");
std::vector<OrbitRecord> parse_orbit_table(const std::string& text, const std::string& source = "<input>");
std::string serialize_orbit_table(const std::vector<OrbitRecord>& records);

/// Owns the algebras orbit records live in, built on first use.
class AlgebraCache {
 public:
  const LieAlgebra& chevalley(char type, int rank);
  const ClassicalRealization& realization(char type, int rank);
  /// Chevalley algebra for root representatives, the realization for partitions.
  const LieAlgebra& algebra_for(const OrbitRecord& r);
  Element representative(const OrbitRecord& r);

 private:
  std::map<std::pair<char, int>, std::unique_ptr<LieAlgebra>> chevalley_;
  std::map<std::pair<char, int>, std::unique_ptr<ClassicalRealization>> realizations_;
};

/// Checks dim g^e and dim z(g^e) of a record; returns an empty string on
/// success and a diagnostic otherwise.
std::string validate_record(AlgebraCache& cache, const OrbitRecord& r);

struct OrbitTable {
  std::vector<OrbitRecord> records;
  /// One line per rejected record.
  std::vector<std::string> rejected;
};

/// Parses and validates. Throws ParseError on malformed input and InputError
/// if the file cannot be read; failing records go to `rejected`. A nonempty
/// label keeps only the records carrying it.
OrbitTable load_orbit_table(const std::string& path, AlgebraCache& cache, const std::string& label = {});

}  // namespace lieidx
