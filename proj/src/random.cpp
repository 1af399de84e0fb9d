#include "lieidx/random.hpp"

namespace lieidx {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw InputError("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  // Reject the tail so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

RatVector Rng::vector(std::size_t n, long bound) {
  RatVector v(n);
  for (auto& c : v) c = uniform(-bound, bound);
  return v;
}

}  // namespace lieidx
