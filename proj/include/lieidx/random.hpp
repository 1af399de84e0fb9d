#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "lieidx/exactla.hpp"

namespace lieidx {

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view text);

/// Task seed derived from the run seed and a task label.
inline std::uint64_t split_seed(std::uint64_t seed, std::string_view label) {
  return seed ^ fnv1a64(label);
}

/// mt19937_64 with a portable bounded-integer draw.
///
/// std::uniform_int_distribution is implementation defined, so identical
/// seeds would give different reports on different standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Vector with integer coordinates in [-bound, bound].
  RatVector vector(std::size_t n, long bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lieidx
