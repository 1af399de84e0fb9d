#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace lieidx::tool {

int worse(int a, int b) {
  if (a == kError || b == kError) return kError;
  if (a == kInconclusive || b == kInconclusive) return kInconclusive;
  return kOk;
}

namespace {

Json vec(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<long> parse_longs(std::string s, const std::string& what) {
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InputError("--rep: bad integer '" + tok + "' in " + what);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Json to_json(const RunConfig& cfg) {
  return Json{{"seed", cfg.seed},
              {"samples", cfg.samples},
              {"coord_bound", cfg.coord_bound},
              {"t_extra", cfg.t_extra},
              {"retries", cfg.retries},
              {"bolsinov_trials", cfg.bolsinov_trials},
              {"torus_candidates", cfg.torus_candidates}};
}

Json to_json(const IndexCertificate& c) {
  return Json{{"certified", c.certified},
              {"subalgebra_dim", c.subalgebra_dim},
              {"stabilizer_dim", c.stabilizer_dim},
              {"samples_used", c.samples_used},
              {"observed", c.observed},
              {"witness", vec(c.witness)}};
}

Json to_json(const BolsinovCertificate& c) {
  return Json{{"found", c.found},
              {"trials_used", c.trials_used},
              {"dim_centralizer", c.dim_centralizer},
              {"dim_v", c.dim_v},
              {"target_v", c.target_v},
              {"dim_sum", c.dim_sum},
              {"target_sum", c.target_sum},
              {"dim_intersection", c.dim_intersection},
              {"condition4", c.condition4},
              {"x", vec(c.x)}};
}

Json to_json(const TorusStage& st) {
  Json mult = Json::object();
  for (const auto& [value, m] : st.t_multiplicities) mult[to_string(value)] = m;
  Json mats = Json::array();
  for (const auto& m : st.matrices) {
    Json j{{"weight", vec(m.weight)}, {"order", m.order}, {"evaluated", m.evaluated}};
    if (m.evaluated) {
      j["nonzero"] = m.nonzero;
      j["minor_rank"] = m.minor_rank;
      j["determinant"] = m.determinant;
    }
    mats.push_back(std::move(j));
  }
  Json t1 = Json::array();
  for (const auto& v : st.t1) t1.push_back(vec(v));
  return Json{{"from_record", st.from_record},
              {"candidates_tried", st.candidates_tried},
              {"t", vec(st.t)},
              {"t1", t1},
              {"dim_le", st.dim_le},
              {"dim_l1e", st.dim_l1e},
              {"bookkeeping", st.bookkeeping},
              {"symmetric", st.symmetric},
              {"t_multiplicities", mult},
              {"matrices", mats},
              {"unsupported", st.unsupported},
              {"condition", st.condition ? Json(*st.condition) : Json(nullptr)},
              {"le_index", to_json(st.le_index)}};
}

Json to_json(const OrbitVerdict& v) {
  return Json{{"label", v.label},
              {"algebra", std::string(1, v.type) + std::to_string(v.rank)},
              {"dim_g", v.dim_g},
              {"dim_centralizer", v.dim_centralizer},
              {"dim_center", v.dim_center},
              {"dims_match", v.dims_match},
              {"center_criterion_agrees", v.center_criterion_agrees},
              {"index", to_json(v.index)},
              {"vinberg_parity_ok", v.vinberg_parity_ok},
              {"center_dim_one", v.center_dim_one},
              {"torus", v.torus ? to_json(*v.torus) : Json(nullptr)},
              {"torus_note", v.torus_note},
              {"expectation_failures", v.expectation_failures},
              {"verdict", to_string(v.verdict)}};
}

Json to_json(const ClassicalSweepReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"partition", row.partition.parts()}, {"valid", row.valid}};
    if (row.valid) {
      j["rigidity"] = to_string(row.rigidity);
      j["dim_centralizer"] = row.dim_centralizer;
      j["formula_dim"] = row.formula_dim;
      j["dim_center"] = row.dim_center;
      j["powers_check"] = row.powers_check;
      j["powers_predicted"] = row.powers_predicted ? Json(*row.powers_predicted) : Json(nullptr);
      j["index"] = to_json(row.index);
      j["error"] = row.error;
      j["passed"] = row.passed(r.rank);
    }
    rows.push_back(std::move(j));
  }
  return Json{{"algebra", std::string(1, r.type) + std::to_string(r.rank)},
              {"valid_count", r.valid_count()},
              {"rigid_nonzero_count", r.rigid_nonzero_count()},
              {"passed", r.passed()},
              {"rows", rows}};
}

int exit_code(const OrbitVerdict& v) {
  if (!v.dims_match || !v.center_criterion_agrees || !v.vinberg_parity_ok || !v.expectation_failures.empty()) {
    return kError;
  }
  return v.verdict == Verdict::Certified ? kOk : kInconclusive;
}

int exit_code(const ClassicalSweepReport& r) {
  int code = r.passed() ? kOk : kError;
  for (const auto& row : r.rows) {
    if (!row.valid) continue;
    if (!row.error.empty()) code = kError;
    if (!row.index.certified) code = worse(code, kInconclusive);
  }
  return code;
}

Representative parse_rep(AlgebraCache& cache, char type, int rank, const std::string& rep) {
  const auto colon = rep.find(':');
  if (colon == std::string::npos) throw InputError("--rep must start with roots: or partition:");
  const std::string kind = rep.substr(0, colon);
  const std::string body = rep.substr(colon + 1);
  Representative out;
  out.text = rep;
  if (kind == "partition") {
    std::vector<long> parts = parse_longs(body, rep);
    if (parts.empty()) throw InputError("--rep: empty partition");
    std::vector<int> ip(parts.begin(), parts.end());
    const ClassicalRealization& real = cache.realization(type, rank);
    out.algebra = &real.algebra();
    out.element = nilpotent_from_partition(real, Partition(ip));
    return out;
  }
  if (kind != "roots") throw InputError("--rep: unknown kind '" + kind + "'");
  const LieAlgebra& L = cache.chevalley(type, rank);
  std::vector<IntVector> roots;
  std::string part;
  std::istringstream in(body);
  while (std::getline(in, part, ';')) {
    std::vector<long> v = parse_longs(part, rep);
    if (v.empty()) continue;
    if (v.size() != static_cast<std::size_t>(rank)) {
      throw InputError("--rep: root '" + part + "' needs " + std::to_string(rank) + " coordinates");
    }
    roots.push_back(v);
  }
  out.algebra = &L;
  out.element = root_vector_sum(L, roots);
  return out;
}

std::string text_line(const OrbitVerdict& v) {
  std::ostringstream s;
  s << std::left << std::setw(12) << v.label << " " << std::setw(19) << to_string(v.verdict) << " dim g^e "
    << v.dim_centralizer << ", dim z " << v.dim_center << ", index " << v.index.stabilizer_dim;
  if (v.torus) {
    s << ", dim l^e " << v.torus->dim_le << ", condition ";
    if (v.torus->condition) {
      s << *v.torus->condition;
    } else {
      s << "unset (" << v.torus->unsupported << " matrices above order " << kMaxPolyDetOrder << ")";
    }
  } else {
    s << ", " << v.torus_note;
  }
  for (const auto& f : v.expectation_failures) s << "; " << f;
  return s.str();
}

std::string text_lines(const ClassicalSweepReport& r) {
  std::ostringstream s;
  s << r.type << r.rank << ": " << r.valid_count() << " orbits, " << r.rigid_nonzero_count()
    << " rigid nonzero, " << (r.passed() ? "passed" : "FAILED") << "\n";
  for (const auto& row : r.rows) {
    if (!row.valid) continue;
    s << "  " << std::left << std::setw(20) << row.partition.to_string() << std::setw(15) << to_string(row.rigidity)
      << " dim g^e " << std::setw(3) << row.dim_centralizer << " dim z " << row.dim_center << " powers "
      << (row.powers_check ? "yes" : "no ") << " index " << row.index.stabilizer_dim
      << (row.index.certified ? " certified" : " not certified");
    if (!row.error.empty()) s << " error: " << row.error;
    s << "\n";
  }
  return s.str();
}

}  // namespace lieidx::tool
