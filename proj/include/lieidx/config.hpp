#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace lieidx {

struct RunConfig {
  std::uint64_t seed = 1;
  /// Functionals drawn per index certificate.
  std::size_t samples = 32;
  /// Random coordinates are drawn from [-coord_bound, coord_bound].
  long coord_bound = 20;
  std::size_t t_extra = 3;
  /// Redraws of a non-regular x per Bolsinov trial.
  std::size_t retries = 50;
  std::size_t bolsinov_trials = 50;
  /// Tori examined when a record has no torus of its own.
  std::size_t torus_candidates = 64;

  /// Throws InputError if a count is not positive.
  void validate() const;
};

}  // namespace lieidx
