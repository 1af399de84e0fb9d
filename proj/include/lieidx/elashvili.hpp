#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieidx/config.hpp"
#include "lieidx/indexcore.hpp"
#include "lieidx/orbits.hpp"
#include "lieidx/poly.hpp"

namespace lieidx {

/// No semisimple element was found in g^e ∩ g^f.
class SearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Commuting semisimple elements of g^e ∩ g^f. The first t.size() entries
/// of t1 are the generators of t.
struct TorusPair {
  std::vector<Element> t;
  std::vector<Element> t1;

  SubspaceBasis t_span(std::size_t ambient) const { return SubspaceBasis::span(ambient, t); }
  SubspaceBasis t1_span(std::size_t ambient) const { return SubspaceBasis::span(ambient, t1); }
};

/// Throws InputError naming the first violated condition: generators in
/// g^e and g^f, t inside t1, pairwise commuting, ad-semisimple with
/// rational eigenvalues, t1 generators independent.
void validate_torus(const LieAlgebra& L, const SL2Triple& triple, const TorusPair& tp);

/// Candidate tori in search order. The Cartan part of g^e ∩ g^f is used
/// when it is nonzero: t runs over its primitive basis vectors and their
/// pairwise sums and differences, and t1 over the spans of t with subsets
/// of the remaining basis vectors, largest first. Otherwise single
/// semisimple basis vectors (or pair sums) of g^e ∩ g^f are tried.
std::vector<TorusPair> torus_candidates(const LieAlgebra& L, const SL2Triple& triple, std::size_t limit);

/// The record's torus if it has one (validated), else the first candidate.
/// Throws SearchError when there is no candidate.
TorusPair find_tori(const LieAlgebra& L, const SL2Triple& triple, const OrbitRecord& record);

struct WeightDecomposition {
  std::size_t t_dim = 0;
  /// Weights are vectors of eigenvalues on the t1 generators.
  std::map<RatVector, SubspaceBasis> spaces;
  /// Weight zero on t.
  SubspaceBasis le;
  /// Weight zero on t1.
  SubspaceBasis l1e;
  std::size_t ge_dim = 0;

  /// Nonzero on t, with the first nonzero t-entry positive.
  std::vector<RatVector> positive_weights() const;
  std::size_t multiplicity(const RatVector& w) const;
  /// 2 (sum of positive multiplicities) + dim l^e - dim g^e.
  long bookkeeping() const;
  /// Every weight -w has the multiplicity of w.
  bool symmetric() const;
};

/// Simultaneous eigenspaces of ad t1 on g^e. Throws InvariantError if the
/// spectrum is not rational or the spaces do not add up to g^e.
WeightDecomposition weight_decompose(const LieAlgebra& L, const Subalgebra& ge, const TorusPair& tp);

struct PairingMatrix {
  RatVector weight;
  std::vector<Element> v;
  std::vector<Element> w;
  /// Entry (k, l) is [v_k, w_l] as a linear form in the coordinates over
  /// the basis of l1^e.
  PolyMatrix entries;

  std::size_t order() const { return v.size(); }
};

/// One matrix per positive weight with a nonzero weight space. Throws
/// InvariantError on a multiplicity mismatch or an entry outside l1^e.
std::vector<PairingMatrix> pairing_matrices(const LieAlgebra& L, const WeightDecomposition& wd);

Poly pairing_determinant(const PairingMatrix& pm);
bool qi_nonzero(const PairingMatrix& pm);
/// Largest k with a nonzero k x k minor over row and column subsets.
std::size_t minor_rank(const PairingMatrix& pm);

struct PairingSummary {
  RatVector weight;
  std::size_t order = 0;
  /// False when the order is above kMaxPolyDetOrder; nothing else is set then.
  bool evaluated = true;
  bool nonzero = false;
  std::size_t minor_rank = 0;
  std::string determinant;
};

struct TorusStage {
  /// Coordinates over the canonical basis of g^e.
  RatVector t;
  std::vector<RatVector> t1;
  bool from_record = false;
  std::size_t candidates_tried = 0;
  std::size_t dim_le = 0;
  std::size_t dim_l1e = 0;
  long bookkeeping = 0;
  bool symmetric = false;
  /// Multiplicities of the nonzero values of the first t generator.
  std::map<Rational, std::size_t> t_multiplicities;
  std::vector<PairingSummary> matrices;
  /// Matrices above the determinant order bound.
  std::size_t unsupported = 0;
  /// 1 if every q_i is nonzero; 2 if exactly one vanishes and its matrix
  /// has a nonzero minor of order m_j - 1. Unset if some matrix is unsupported.
  std::optional<int> condition;
  IndexCertificate le_index;
};

/// Evaluates one torus: decomposition, pairing matrices and conditions.
TorusStage evaluate_torus(const LieAlgebra& L, const Subalgebra& ge, const TorusPair& tp, const RunConfig& cfg,
                          const std::string& label);

enum class Verdict { Certified, StructureConfirmed, Inconclusive };
std::string to_string(Verdict v);

struct OrbitVerdict {
  std::string label;
  char type = 'A';
  int rank = 0;
  std::size_t dim_g = 0;
  std::size_t dim_centralizer = 0;
  std::size_t dim_center = 0;
  bool dims_match = false;
  /// The bracket criterion for the center agrees with center_of on every
  /// basis vector of g^e.
  bool center_criterion_agrees = false;
  IndexCertificate index;
  /// Every observed stabilizer is at least the rank and has the parity of dim g^e.
  bool vinberg_parity_ok = false;
  bool center_dim_one = false;
  std::optional<TorusStage> torus;
  std::string torus_note;
  /// Mismatches against the record's optional dim_le and condition.
  std::vector<std::string> expectation_failures;
  Verdict verdict = Verdict::Inconclusive;
};

/// Raised by verify_orbit; stage is one of 'a'..'d'.
class StageError : public std::runtime_error {
 public:
  StageError(char stage, const std::string& what);
  char stage() const { return stage_; }

 private:
  char stage_;
};

/// (a) dims of g^e and z(g^e) against the record, (b) certified index,
/// (c) dim z = 1, (d) torus conditions when a torus exists.
OrbitVerdict verify_orbit(AlgebraCache& cache, const OrbitRecord& record, const RunConfig& cfg);

}  // namespace lieidx
