#include "lieidx/rootsys.hpp"

#include <algorithm>

#include "lieidx/exactla.hpp"

namespace lieidx {

void validate_type(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 3; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) {
    throw InputError(std::string("invalid simple type ") + type + std::to_string(rank));
  }
}

namespace {

std::vector<IntVector> symmetric_form(char type, int n) {
  std::vector<IntVector> f(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  auto set = [&](int i, int j, long v) {
    f[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    f[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  switch (type) {
    case 'A':
      for (int i = 0; i < n; ++i) set(i, i, 2);
      for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) set(i, i, 4);
      set(n - 1, n - 1, 2);
      for (int i = 0; i + 1 < n; ++i) set(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) set(i, i, 2);
      set(n - 1, n - 1, 4);
      for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
      set(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) set(i, i, 2);
      for (int i = 0; i + 2 < n; ++i) set(i, i + 1, -1);
      set(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) set(i, i, 2);
      set(0, 2, -1);
      set(1, 3, -1);
      set(2, 3, -1);
      for (int i = 3; i + 1 < n; ++i) set(i, i + 1, -1);
      break;
    case 'F':
      set(0, 0, 4);
      set(1, 1, 4);
      set(2, 2, 2);
      set(3, 3, 2);
      set(0, 1, -2);
      set(1, 2, -2);
      set(2, 3, -1);
      break;
    case 'G':
      set(0, 0, 2);
      set(1, 1, 6);
      set(0, 1, -3);
      break;
    default:
      break;
  }
  return f;
}

std::vector<int> degree_table(char type, int n) {
  std::vector<int> d;
  switch (type) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
    default:
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

bool root_order(const IntVector& a, const IntVector& b) {
  int ha = RootSystem::height(a);
  int hb = RootSystem::height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  validate_type(type, rank);
  form_ = symmetric_form(type, rank);
  const auto n = static_cast<std::size_t>(rank);
  cartan_.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cartan_[i][j] = 2 * form_[i][j] / form_[i][i];
  degrees_ = degree_table(type, rank);

  // Closure under root strings, layer by layer in height.
  std::vector<IntVector> layer;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    layer.push_back(e);
  }
  std::map<IntVector, bool> seen;
  for (const auto& r : layer) seen[r] = true;
  while (!layer.empty()) {
    positive_.insert(positive_.end(), layer.begin(), layer.end());
    std::vector<IntVector> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        IntVector down = beta;
        long p = 0;
        while (true) {
          down[i] -= 1;
          if (seen.count(down) == 0) break;
          ++p;
        }
        long q = p - pair_coroot(beta, static_cast<int>(i));
        if (q <= 0) continue;
        IntVector up = beta;
        up[i] += 1;
        if (seen.count(up) == 0) {
          seen[up] = true;
          next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(positive_.begin(), positive_.end(), root_order);
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;
}

std::string RootSystem::label() const { return std::string(1, type_) + std::to_string(rank_); }

std::optional<std::size_t> RootSystem::find_positive(const IntVector& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const IntVector& coords) const {
  if (find_positive(coords)) return true;
  IntVector neg(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  return find_positive(neg).has_value();
}

long RootSystem::inner(const IntVector& a, const IntVector& b) const {
  long s = 0;
  const auto n = static_cast<std::size_t>(rank_);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) s += a[i] * form_[i][j] * b[j];
  }
  return s;
}

long RootSystem::pair_coroot(const IntVector& beta, int i) const {
  const auto ii = static_cast<std::size_t>(i);
  long s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * cartan_[ii][j];
  return s;
}

int RootSystem::height(const IntVector& coords) {
  long h = 0;
  for (long c : coords) h += c;
  return static_cast<int>(h);
}

RootSystem build_root_system(char type, int rank) { return RootSystem(type, rank); }

std::vector<int> degrees(char type, int rank) {
  validate_type(type, rank);
  return degree_table(type, rank);
}

}  // namespace lieidx
