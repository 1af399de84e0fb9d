#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieidx {

using IntVector = std::vector<long>;

/// Root system of a simple Lie algebra in Bourbaki numbering.
///
/// `form` is the symmetric bilinear form on simple roots, scaled so that
/// every entry is an integer and the shortest roots have squared length 2.
class RootSystem {
 public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  /// cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
  const std::vector<IntVector>& cartan() const { return cartan_; }
  const std::vector<IntVector>& form() const { return form_; }
  const std::vector<IntVector>& positive_roots() const { return positive_; }
  const std::vector<int>& degrees() const { return degrees_; }

  std::size_t num_positive() const { return positive_.size(); }
  std::size_t dim_algebra() const { return 2 * positive_.size() + static_cast<std::size_t>(rank_); }
  /// (dim g + rank) / 2.
  std::size_t b() const { return (dim_algebra() + static_cast<std::size_t>(rank_)) / 2; }

  /// Index of a positive root in the canonical list.
  std::optional<std::size_t> find_positive(const IntVector& coords) const;
  bool is_root(const IntVector& coords) const;

  long inner(const IntVector& a, const IntVector& b) const;
  /// <beta, alpha_i^vee>.
  long pair_coroot(const IntVector& beta, int i) const;
  static int height(const IntVector& coords);

 private:
  char type_;
  int rank_;
  std::vector<IntVector> cartan_;
  std::vector<IntVector> form_;
  std::vector<IntVector> positive_;
  std::vector<int> degrees_;
  std::map<IntVector, std::size_t> index_;
};

/// Throws InputError unless (type, rank) names a simple Lie algebra.
void validate_type(char type, int rank);
RootSystem build_root_system(char type, int rank);
std::vector<int> degrees(char type, int rank);

}  // namespace lieidx
