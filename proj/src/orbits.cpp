#include "lieidx/orbits.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lieidx {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw InputError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::total() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::dual() const {
  std::vector<int> d;
  if (parts_.empty()) return Partition();
  for (int k = 1; k <= parts_.front(); ++k) {
    d.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [k](int p) { return p >= k; })));
  }
  return Partition(std::move(d));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

bool even_multiplicity_of(const Partition& p, bool odd_parts) {
  for (int k : p.parts()) {
    if ((k % 2 == 1) == odd_parts && p.multiplicity(k) % 2 != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InputError("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

int natural_dim(char type, int rank) {
  switch (type) {
    case 'A': return rank + 1;
    case 'B': return 2 * rank + 1;
    case 'C':
    case 'D': return 2 * rank;
    default: throw InputError(std::string("not a classical type: ") + type);
  }
}

bool valid_for(char type, int rank, const Partition& p) {
  if (p.total() != natural_dim(type, rank)) return false;
  switch (type) {
    case 'A': return true;
    case 'B':
    case 'D': return even_multiplicity_of(p, false);
    case 'C': return even_multiplicity_of(p, true);
    default: return false;
  }
}

bool rigid_bd(const Partition& p, char type) {
  if (type != 'B' && type != 'D') throw InputError("rigid_bd: type must be B or D");
  const int n = p.total();
  if ((type == 'B') != (n % 2 == 1) || !even_multiplicity_of(p, false) || n == 0) {
    throw InputError("rigid_bd: " + p.to_string() + " is not a partition for type " + type);
  }
  const auto& q = p.parts();
  if (q.back() != 1) return false;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    if (q[i] - q[i + 1] > 1) return false;
  }
  for (int k : q) {
    if (k % 2 == 1 && p.multiplicity(k) == 2) return false;
  }
  return true;
}

bool powers_generate_center_bd(const Partition& p) {
  int n1 = p.part(0), n2 = p.part(1), n3 = p.part(2);
  return !(n1 % 2 == 1 && n2 % 2 == 1 && n3 < n2);
}

long induced_dim(long dim_g, long dim_levi, long dim_orbit_in_levi) {
  if (dim_g < 0 || dim_levi < 0 || dim_orbit_in_levi < 0) throw InputError("induced_dim: negative input");
  long d = dim_g - dim_levi + dim_orbit_in_levi;
  if (d < 0) throw InputError("induced_dim: negative result");
  return d;
}

std::size_t centralizer_dim_formula(char type, const Partition& p) {
  long sq = 0;
  const Partition dual = p.dual();
  for (int k : dual.parts()) sq += static_cast<long>(k) * k;
  long odd = 0;
  for (int k : p.parts()) odd += k % 2;
  switch (type) {
    case 'A': return static_cast<std::size_t>(sq - 1);
    case 'B':
    case 'D': return static_cast<std::size_t>((sq - odd) / 2);
    case 'C': return static_cast<std::size_t>((sq + odd) / 2);
    default: throw InputError(std::string("not a classical type: ") + type);
  }
}

// ---------------------------------------------------------------- realizations

namespace {

using IntMat = std::vector<long>;  // row-major n x n

IntMat commutator(const IntMat& a, const IntMat& b, std::size_t n) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      long aik = a[i * n + k], bik = b[i * n + k];
      if (aik == 0 && bik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j] - bik * a[k * n + j];
    }
  }
  return c;
}

RatMatrix to_rat(const IntMat& a, std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = a[i];
  return m;
}

IntMat antidiagonal(std::size_t n) {
  IntMat j(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) j[i * n + (n - 1 - i)] = 1;
  return j;
}

IntMat product(const IntMat& a, const IntMat& b, std::size_t n) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  }
  return c;
}

std::string pair_label(char c, std::size_t i, std::size_t j) {
  return std::string(1, c) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

ClassicalRealization::ClassicalRealization(char type, int rank) : type_(type), rank_(rank) {
  const int min_rank = type == 'A' ? 1 : type == 'B' || type == 'C' ? 2 : type == 'D' ? 4 : -1;
  if (min_rank < 0 || rank < min_rank) {
    throw InputError(std::string("no classical realization for ") + type + std::to_string(rank));
  }
  n_ = static_cast<std::size_t>(natural_dim(type, rank));
  const std::size_t n = n_;
  IntMat form(n * n, 0);
  std::vector<IntMat> basis;
  std::vector<std::string> labels;
  auto unit = [n](std::size_t i, std::size_t j, long v) {
    IntMat m(n * n, 0);
    m[i * n + j] = v;
    return m;
  };
  if (type == 'A') {
    for (std::size_t i = 0; i < n; ++i) form[i * n + i] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        basis.push_back(unit(i, j, 1));
        labels.push_back(pair_label('E', i, j));
      }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      IntMat h = unit(i, i, 1);
      h[(i + 1) * n + i + 1] = -1;
      basis.push_back(h);
      labels.push_back("H(" + std::to_string(i + 1) + ")");
    }
  } else if (type == 'B' || type == 'D') {
    form = antidiagonal(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        IntMat a = unit(i, j, 1);
        a[j * n + i] = -1;
        basis.push_back(product(form, a, n));
        labels.push_back(pair_label('A', i, j));
      }
    }
  } else {
    const std::size_t l = n / 2;
    for (std::size_t i = 0; i < l; ++i) {
      form[i * n + (n - 1 - i)] = 1;
      form[(n - 1 - i) * n + i] = -1;
    }
    IntMat minus_form(n * n);
    for (std::size_t k = 0; k < n * n; ++k) minus_form[k] = -form[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        IntMat s = unit(i, j, 1);
        s[j * n + i] = 1;
        basis.push_back(product(minus_form, s, n));
        labels.push_back(pair_label('S', i, j));
      }
    }
  }
  form_ = to_rat(form, n);
  form_inv_ = *inverse(form_);

  const std::size_t dim = basis.size();
  std::vector<std::size_t> cartan;
  for (std::size_t k = 0; k < dim; ++k) {
    bool diag = true;
    for (std::size_t i = 0; i < n && diag; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && basis[k][i * n + j] != 0) {
          diag = false;
          break;
        }
      }
    }
    if (diag) cartan.push_back(k);
    basis_.push_back(to_rat(basis[k], n));
  }

  // Reduce [flattened basis | identity]; row k of the result expresses an
  // echelon vector with pivot pivots_[k] as a combination of the basis.
  std::vector<RatVector> rows;
  for (std::size_t k = 0; k < dim; ++k) {
    RatVector r(n * n + dim);
    for (std::size_t e = 0; e < n * n; ++e) r[e] = basis[k][e];
    r[n * n + k] = 1;
    rows.push_back(std::move(r));
  }
  EchelonForm ef = row_reduce(std::move(rows), n * n + dim);
  for (std::size_t k = 0; k < dim; ++k) {
    if (ef.pivots[k] >= n * n) throw InvariantError("realization basis is dependent");
    pivots_.push_back(ef.pivots[k]);
    transform_.emplace_back(ef.rows[k].begin() + static_cast<std::ptrdiff_t>(n * n), ef.rows[k].end());
  }

  std::vector<std::vector<Term>> table(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      IntMat c = commutator(basis[a], basis[b], n);
      RatVector coords(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        long v = c[pivots_[k]];
        if (v == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (sgn(transform_[k][j]) != 0) coords[j] += v * transform_[k][j];
        }
      }
      for (std::size_t j = 0; j < dim; ++j) {
        if (sgn(coords[j]) == 0) continue;
        if (coords[j].get_den() != 1) throw InvariantError("realization: non-integral structure constant");
        long v = coords[j].get_num().get_si();
        table[a * dim + b].push_back(Term{j, v});
        table[b * dim + a].push_back(Term{j, -v});
      }
    }
  }
  static const char* names[] = {"sl", "so", "sp", "so"};
  const char* base = names[type == 'A' ? 0 : type == 'B' ? 1 : type == 'C' ? 2 : 3];
  // sp4 is labeled with the isomorphic type B2; only the rank and degrees are read from the label.
  char label_type = (type == 'C' && rank == 2) ? 'B' : type;
  algebra_ = std::make_unique<LieAlgebra>(dim, label_type, rank, std::move(table), std::move(labels),
                                          std::move(cartan), std::string(base) + std::to_string(n));
}

RatMatrix ClassicalRealization::to_matrix(const Element& a) const {
  if (a.size() != basis_.size()) throw InputError("to_matrix: length mismatch");
  RatMatrix m(n_, n_);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sgn(a[k]) == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(basis_[k](i, j)) != 0) m(i, j) += a[k] * basis_[k](i, j);
      }
    }
  }
  return m;
}

Element ClassicalRealization::from_matrix(const RatMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw InputError("from_matrix: size mismatch");
  const std::size_t dim = basis_.size();
  Element coords(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const Rational& v = m(pivots_[k] / n_, pivots_[k] % n_);
    if (sgn(v) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(transform_[k][j]) != 0) coords[j] += v * transform_[k][j];
    }
  }
  if (!(to_matrix(coords) == m)) throw InputError("from_matrix: matrix is not in " + algebra_->name());
  return coords;
}

RatMatrix ClassicalRealization::project(const RatMatrix& m) const {
  if (type_ == 'A') {
    Rational s = m.trace() / static_cast<long>(n_);
    return m - s * RatMatrix::identity(n_);
  }
  return Rational(1, 2) * (m - form_inv_ * m.transpose() * form_);
}

namespace {

struct HyperbolicPair {
  RatVector p, q;
};

RatVector unit_vector(std::size_t n, std::size_t i, long v = 1) {
  RatVector u(n);
  u[i] = v;
  return u;
}

}  // namespace

Element nilpotent_from_partition(const ClassicalRealization& r, const Partition& p) {
  if (!valid_for(r.type(), r.rank(), p)) {
    throw InputError(p.to_string() + " is not a nilpotent Jordan type for " + r.algebra().name());
  }
  const std::size_t n = r.n();
  RatMatrix nil(n, n);
  if (r.type() == 'A') {
    std::size_t base = 0;
    for (int d : p.parts()) {
      for (int i = 0; i + 1 < d; ++i) nil(base + static_cast<std::size_t>(i), base + static_cast<std::size_t>(i) + 1) = 1;
      base += static_cast<std::size_t>(d);
    }
    return r.from_matrix(nil);
  }

  // Blocks with their own nondegenerate form (odd parts for so, even parts
  // for sp) stand alone; the others come in pairs u, w dual to each other.
  // Chains are v_0 -> v_1 -> ... with (v_i, v_{d-1-i}) = +-1.
  const bool symplectic = r.type() == 'C';
  std::vector<HyperbolicPair> pairs;
  std::vector<RatVector> plus_middles, minus_middles;
  std::size_t base = 0;
  auto chain = [&](std::size_t b, int d) {
    for (int i = 0; i + 1 < d; ++i) nil(b + static_cast<std::size_t>(i) + 1, b + static_cast<std::size_t>(i)) = 1;
  };
  std::set<int, std::greater<>> values(p.parts().begin(), p.parts().end());
  for (int d : values) {
    const int mult = p.multiplicity(d);
    const auto ud = static_cast<std::size_t>(d);
    const bool alone = symplectic ? d % 2 == 0 : d % 2 == 1;
    if (alone) {
      for (int k = 0; k < mult; ++k) {
        chain(base, d);
        if (symplectic) {
          for (std::size_t i = 0; i < ud / 2; ++i) {
            pairs.push_back({unit_vector(n, base + i), unit_vector(n, base + ud - 1 - i, i % 2 ? -1 : 1)});
          }
        } else {
          // sign eps so the middle vector has the norm that balances the others
          const std::size_t m = (ud - 1) / 2;
          const long want = plus_middles.size() <= minus_middles.size() ? 1 : -1;
          const long eps = want * (m % 2 ? -1 : 1);
          for (std::size_t i = 0; i < m; ++i) {
            long sign = eps * (i % 2 ? -1 : 1);
            pairs.push_back({unit_vector(n, base + i), unit_vector(n, base + ud - 1 - i, sign)});
          }
          (want == 1 ? plus_middles : minus_middles).push_back(unit_vector(n, base + m));
        }
        base += ud;
      }
    } else {
      for (int k = 0; k < mult / 2; ++k) {
        chain(base, d);
        chain(base + ud, d);
        for (std::size_t i = 0; i < ud; ++i) {
          pairs.push_back({unit_vector(n, base + i), unit_vector(n, base + ud + ud - 1 - i, i % 2 ? -1 : 1)});
        }
        base += 2 * ud;
      }
    }
  }
  // (m+, m+) = 1 and (m-, m-) = -1, so m+ + m- and (m+ - m-)/2 pair to 1.
  for (std::size_t k = 0; k < minus_middles.size(); ++k) {
    RatVector a = plus_middles[k], b = plus_middles[k];
    for (std::size_t i = 0; i < n; ++i) {
      a[i] += minus_middles[k][i];
      b[i] = (b[i] - minus_middles[k][i]) / 2;
    }
    pairs.push_back({a, b});
  }
  if (pairs.size() != n / 2 || plus_middles.size() != minus_middles.size() + n % 2) {
    throw InvariantError("nilpotent_from_partition: form bookkeeping failed");
  }

  // Columns of g: p_k to e_k, q_k to e_{n-1-k}, and the middle vector.
  RatMatrix g(n, n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      g(i, k) = pairs[k].p[i];
      g(i, n - 1 - k) = pairs[k].q[i];
    }
  }
  if (n % 2 == 1) {
    for (std::size_t i = 0; i < n; ++i) g(i, n / 2) = plus_middles.back()[i];
  }
  auto gi = inverse(g);
  if (!gi) throw InvariantError("nilpotent_from_partition: singular change of basis");
  Element e = r.from_matrix(*gi * nil * g);
  if (!(jordan_type(r.to_matrix(e)) == p)) throw InvariantError("nilpotent_from_partition: wrong Jordan type");
  return e;
}

Partition jordan_type(const RatMatrix& nilpotent) {
  const std::size_t n = nilpotent.rows();
  std::vector<std::size_t> ranks{n};
  RatMatrix pw = nilpotent;
  while (ranks.back() > 0) {
    if (ranks.size() > n + 1) throw InputError("jordan_type: matrix is not nilpotent");
    ranks.push_back(rank(pw));
    pw = pw * nilpotent;
  }
  // parts >= k: ranks[k-1] - ranks[k]
  std::vector<int> parts;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    std::size_t at_least = ranks[k - 1] - ranks[k];
    std::size_t next = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least - next; ++c) parts.push_back(static_cast<int>(k));
  }
  return Partition(parts);
}

bool center_powers_check(const ClassicalRealization& r, const Element& e) {
  const LieAlgebra& L = r.algebra();
  SubspaceBasis z = center_of(centralizer(L, {e}));
  const RatMatrix m = r.to_matrix(e);
  std::vector<RatVector> powers;
  RatMatrix pw = m;
  for (std::size_t k = 1; k <= r.n() && !pw.is_zero(); ++k) {
    RatMatrix q = r.project(pw);
    if (!q.is_zero()) powers.push_back(r.from_matrix(q));
    pw = pw * m;
  }
  return SubspaceBasis::span(L.dim(), powers) == z;
}

Element root_vector_sum(const LieAlgebra& L, const std::vector<IntVector>& roots) {
  const RootSystem* rs = L.root_system();
  if (!rs) throw InputError("root_vector_sum: algebra has no root system");
  Element e = L.zero();
  for (const auto& r : roots) {
    if (r.size() != static_cast<std::size_t>(L.rank()) || !rs->find_positive(r)) {
      std::string s;
      for (long c : r) s += (s.empty() ? "" : " ") + std::to_string(c);
      throw InputError("not a positive root of " + L.name() + ": " + s);
    }
    e[L.root_index(r)] += 1;
  }
  return e;
}

// ---------------------------------------------------------------- orbit tables

bool operator==(const OrbitRecord& a, const OrbitRecord& b) {
  return a.type == b.type && a.rank == b.rank && a.label == b.label && a.partition == b.partition &&
         a.roots == b.roots && a.dim_centralizer == b.dim_centralizer && a.dim_center == b.dim_center &&
         a.rigid == b.rigid && a.torus_t == b.torus_t && a.torus_t1 == b.torus_t1 && a.dim_le == b.dim_le &&
         a.condition == b.condition;
}

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : InputError(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument(s);
  return v;
}

std::size_t parse_count(const std::string& s) {
  long v = parse_long(s);
  if (v < 0) throw std::invalid_argument(s);
  return static_cast<std::size_t>(v);
}

RatVector parse_ratvec(const std::string& s) {
  RatVector v;
  for (const auto& w : words(s)) v.push_back(parse_rational(w));
  if (v.empty()) throw std::invalid_argument("empty vector");
  return v;
}

std::string join_vec(const RatVector& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + to_string(x);
  return s;
}

std::string join_root(const IntVector& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

void finish_record(OrbitRecord& r, const std::set<std::string>& keys, const std::string& source) {
  for (const char* k : {"type", "rank", "label", "dim_centralizer", "dim_center", "rigid"}) {
    if (!keys.count(k)) throw ParseError(source, r.line, std::string("missing key '") + k + "'");
  }
  if (keys.count("rep_roots") == keys.count("rep_partition")) {
    throw ParseError(source, r.line, "exactly one of rep_roots and rep_partition is required");
  }
  if (keys.count("torus_t") != keys.count("torus_t1")) {
    throw ParseError(source, r.line, "torus_t and torus_t1 must be given together");
  }
  try {
    if (r.partition) {
      if (r.type != 'A' && r.type != 'B' && r.type != 'C' && r.type != 'D') {
        throw InputError("rep_partition needs a classical type");
      }
      if (r.partition->total() != natural_dim(r.type, r.rank)) throw InputError("partition has the wrong size");
    } else {
      validate_type(r.type, r.rank);
      for (const auto& root : r.roots) {
        if (root.size() != static_cast<std::size_t>(r.rank)) throw InputError("root length differs from the rank");
      }
    }
  } catch (const InputError& e) {
    throw ParseError(source, r.line, e.what());
  }
  if (r.torus_t) {
    for (const auto& v : r.torus_t1) {
      if (v.size() != r.torus_t->size()) throw ParseError(source, r.line, "torus vectors differ in length");
    }
  }
}

}  // namespace

std::vector<OrbitRecord> parse_orbit_table(std::istream& in, const std::string& source) {
  std::vector<OrbitRecord> out;
  std::optional<OrbitRecord> cur;
  std::set<std::string> keys;
  std::string raw;
  std::size_t lineno = 0;
  auto close = [&]() {
    if (cur) {
      finish_record(*cur, keys, source);
      out.push_back(std::move(*cur));
      cur.reset();
      keys.clear();
    }
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line == "[orbit]") {
      close();
      cur = OrbitRecord{};
      cur->line = lineno;
      continue;
    }
    if (!cur) throw ParseError(source, lineno, "expected [orbit]");
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source, lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!keys.insert(key).second) throw ParseError(source, lineno, "duplicate key '" + key + "'");
    if (value.empty()) throw ParseError(source, lineno, "empty value for '" + key + "'");
    OrbitRecord& r = *cur;
    try {
      if (key == "type") {
        if (value.size() != 1 || std::string("ABCDEFG").find(value[0]) == std::string::npos) {
          throw std::invalid_argument("bad type");
        }
        r.type = value[0];
      } else if (key == "rank") {
        long v = parse_long(value);
        if (v < 1) throw std::invalid_argument("bad rank");
        r.rank = static_cast<int>(v);
      } else if (key == "label") {
        r.label = value;
      } else if (key == "rep_roots") {
        for (const auto& part : split(value, ';')) {
          IntVector root;
          for (const auto& w : words(part)) root.push_back(parse_long(w));
          if (root.empty()) throw std::invalid_argument("empty root");
          r.roots.push_back(std::move(root));
        }
      } else if (key == "rep_partition") {
        std::vector<int> parts;
        for (const auto& w : words(value)) parts.push_back(static_cast<int>(parse_long(w)));
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
          if (parts[i] < parts[i + 1]) throw std::invalid_argument("parts must be decreasing");
        }
        r.partition = Partition(parts);
      } else if (key == "dim_centralizer") {
        r.dim_centralizer = parse_count(value);
      } else if (key == "dim_center") {
        r.dim_center = parse_count(value);
      } else if (key == "rigid") {
        if (value != "true" && value != "false") throw std::invalid_argument("expected true or false");
        r.rigid = value == "true";
      } else if (key == "torus_t") {
        r.torus_t = parse_ratvec(value);
      } else if (key == "torus_t1") {
        for (const auto& part : split(value, ';')) r.torus_t1.push_back(parse_ratvec(part));
      } else if (key == "dim_le") {
        r.dim_le = parse_count(value);
      } else if (key == "condition") {
        long c = parse_long(value);
        if (c != 1 && c != 2) throw std::invalid_argument("condition must be 1 or 2");
        r.condition = static_cast<int>(c);
      } else {
        throw ParseError(source, lineno, "unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(source, lineno, "bad value for '" + key + "': " + value);
    }
  }
  close();
  return out;
}

std::vector<OrbitRecord> parse_orbit_table(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_orbit_table(in, source);
}

std::string serialize_orbit_table(const std::vector<OrbitRecord>& records) {
  std::ostringstream out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const OrbitRecord& r = records[i];
    if (i) out << "\n";
    out << "[orbit]\n";
    out << "type = " << r.type << "\n";
    out << "rank = " << r.rank << "\n";
    out << "label = " << r.label << "\n";
    if (r.partition) {
      std::string s;
      for (int k : r.partition->parts()) s += (s.empty() ? "" : " ") + std::to_string(k);
      out << "rep_partition = " << s << "\n";
    } else {
      out << "rep_roots = ";
      for (std::size_t k = 0; k < r.roots.size(); ++k) out << (k ? "; " : "") << join_root(r.roots[k]);
      out << "\n";
    }
    out << "dim_centralizer = " << r.dim_centralizer << "\n";
    out << "dim_center = " << r.dim_center << "\n";
    out << "rigid = " << (r.rigid ? "true" : "false") << "\n";
    if (r.dim_le) out << "dim_le = " << *r.dim_le << "\n";
    if (r.condition) out << "condition = " << *r.condition << "\n";
    if (r.torus_t) {
      out << "torus_t = " << join_vec(*r.torus_t) << "\n";
      out << "torus_t1 = ";
      for (std::size_t k = 0; k < r.torus_t1.size(); ++k) out << (k ? "; " : "") << join_vec(r.torus_t1[k]);
      out << "\n";
    }
  }
  return out.str();
}

const LieAlgebra& AlgebraCache::chevalley(char type, int rank) {
  auto& slot = chevalley_[{type, rank}];
  if (!slot) slot = std::make_unique<LieAlgebra>(build_algebra(type, rank));
  return *slot;
}

const ClassicalRealization& AlgebraCache::realization(char type, int rank) {
  auto& slot = realizations_[{type, rank}];
  if (!slot) slot = std::make_unique<ClassicalRealization>(type, rank);
  return *slot;
}

const LieAlgebra& AlgebraCache::algebra_for(const OrbitRecord& r) {
  return r.partition ? realization(r.type, r.rank).algebra() : chevalley(r.type, r.rank);
}

Element AlgebraCache::representative(const OrbitRecord& r) {
  if (r.partition) return nilpotent_from_partition(realization(r.type, r.rank), *r.partition);
  return root_vector_sum(chevalley(r.type, r.rank), r.roots);
}

std::string validate_record(AlgebraCache& cache, const OrbitRecord& r) {
  std::string where = r.label + (r.line ? " (line " + std::to_string(r.line) + ")" : "");
  try {
    const LieAlgebra& L = cache.algebra_for(r);
    Element e = cache.representative(r);
    if (!is_nilpotent(L, e)) return where + ": representative is not nilpotent";
    Subalgebra ge = centralizer(L, {e});
    if (ge.dim() != r.dim_centralizer) {
      return where + ": dim g^e = " + std::to_string(ge.dim()) + ", expected " + std::to_string(r.dim_centralizer);
    }
    if ((L.dim() - ge.dim()) % 2 != 0) return where + ": odd orbit dimension";
    std::size_t dz = center_of(ge).dim();
    if (dz != r.dim_center) {
      return where + ": dim z(g^e) = " + std::to_string(dz) + ", expected " + std::to_string(r.dim_center);
    }
    if (r.torus_t && r.torus_t->size() != ge.dim()) {
      return where + ": torus coordinates have length " + std::to_string(r.torus_t->size()) + ", expected " +
             std::to_string(ge.dim());
    }
  } catch (const std::exception& ex) {
    return where + ": " + ex.what();
  }
  return "";
}

OrbitTable load_orbit_table(const std::string& path, AlgebraCache& cache, const std::string& label) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read orbit table " + path);
  OrbitTable table;
  for (auto& r : parse_orbit_table(in, path)) {
    if (!label.empty() && r.label != label) continue;
    std::string diag = validate_record(cache, r);
    if (diag.empty()) {
      table.records.push_back(std::move(r));
    } else {
      table.rejected.push_back(std::move(diag));
    }
  }
  return table;
}

}  // namespace lieidx
