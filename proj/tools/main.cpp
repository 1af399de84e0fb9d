#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "checks.hpp"
#include "lieidx/random.hpp"
#include "report.hpp"

using namespace lieidx;
using namespace lieidx::tool;

namespace {

struct Options {
  RunConfig cfg;
  std::string output = "-";
  std::string format = "text";
  unsigned jobs = 0;
  std::string table;
  std::string label;
  std::string type;
  int rank = 0;
  std::string rep;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << " s";
  return out.str();
}

template <class T>
void env_override(const char* name, T& field) {
  const char* v = std::getenv(name);
  if (!v) return;
  std::string s(v);
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    if (!s.empty() && s[0] != '-') x = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InputError(std::string(name) + " is not a nonnegative integer: " + s);
  field = static_cast<T>(x);
}

char parse_type(const std::string& t, int rank) {
  if (t.size() != 1) throw InputError("--type must be a single letter, got '" + t + "'");
  validate_type(t[0], rank);
  return t[0];
}

/// Header shared by every report.
Json header(const std::string& command, const Options& o) {
  return Json{{"tool", "lieidx"}, {"version", kVersion}, {"command", command}, {"config", to_json(o.cfg)}};
}

struct Outcome {
  Json report;
  std::string text;
  int code = kOk;
};

Outcome run_verify(const Options& o) {
  Outcome out;
  out.report = header("verify", o);
  out.report["input"] = Json{{"table", o.table}, {"label", o.label.empty() ? Json(nullptr) : Json(o.label)}};
  AlgebraCache cache;
  OrbitTable table = load_orbit_table(o.table, cache, o.label);
  std::ostringstream text;
  Json rejected = Json::array();
  for (const auto& msg : table.rejected) {
    rejected.push_back(msg);
    text << "rejected: " << msg << "\n";
    out.code = kError;
  }
  Json results = Json::array();
  std::size_t matched = 0;
  for (const auto& r : table.records) {
    if (!o.label.empty() && r.label != o.label) continue;
    ++matched;
    Timer timer;
    try {
      OrbitVerdict v = verify_orbit(cache, r, o.cfg);
      results.push_back(to_json(v));
      out.code = worse(out.code, exit_code(v));
      text << text_line(v) << "  (" << fmt_seconds(timer.seconds()) << ")\n";
    } catch (const StageError& ex) {
      results.push_back(Json{{"label", r.label}, {"error", ex.what()}});
      out.code = kError;
      text << r.label << " ERROR " << ex.what() << "\n";
    }
  }
  if (!o.label.empty() && matched == 0 && table.rejected.empty()) {
    throw InputError("no record labelled " + o.label + " in " + o.table);
  }
  out.report["rejected"] = rejected;
  out.report["results"] = results;
  out.text = text.str();
  return out;
}

Outcome run_sweep(const Options& o) {
  Outcome out;
  const char type = parse_type(o.type, o.rank);
  out.report = header("sweep", o);
  out.report["input"] = Json{{"type", o.type}, {"rank", o.rank}};
  Timer timer;
  ClassicalSweepReport rep = sweep(type, o.rank, o.cfg, o.jobs);
  out.report["results"] = Json::array({to_json(rep)});
  out.code = exit_code(rep);
  out.text = text_lines(rep) + "  (" + fmt_seconds(timer.seconds()) + ")\n";
  return out;
}

Outcome run_index(const Options& o) {
  Outcome out;
  const char type = parse_type(o.type, o.rank);
  out.report = header("index", o);
  out.report["input"] = Json{{"type", o.type}, {"rank", o.rank}, {"rep", o.rep}};
  AlgebraCache cache;
  Timer timer;
  Representative a = parse_rep(cache, type, o.rank, o.rep);
  Subalgebra ga = centralizer(*a.algebra, {a.element});
  IndexCertificate cert = certified_index(ga, o.cfg.samples, split_seed(o.cfg.seed, "index/" + o.rep),
                                          o.cfg.coord_bound);
  out.report["results"] = Json::array({Json{{"rep", o.rep},
                                            {"dim_g", a.algebra->dim()},
                                            {"dim_centralizer", ga.dim()},
                                            {"rank", o.rank},
                                            {"index", to_json(cert)},
                                            {"verdict", cert.certified ? "CERTIFIED" : "INCONCLUSIVE"}}});
  out.code = cert.certified ? kOk : kInconclusive;
  std::ostringstream text;
  text << o.type << o.rank << " " << o.rep << ": dim g^a " << ga.dim() << ", smallest stabilizer "
       << cert.stabilizer_dim << " after " << cert.samples_used << " samples, "
       << (cert.certified ? "CERTIFIED" : "INCONCLUSIVE") << "  (" << fmt_seconds(timer.seconds()) << ")\n";
  out.text = text.str();
  return out;
}

Outcome run_bolsinov(const Options& o) {
  Outcome out;
  const char type = parse_type(o.type, o.rank);
  out.report = header("bolsinov", o);
  out.report["input"] = Json{{"type", o.type}, {"rank", o.rank}, {"rep", o.rep}};
  AlgebraCache cache;
  Timer timer;
  Representative a = parse_rep(cache, type, o.rank, o.rep);
  BolsinovCertificate cert = bolsinov_condition5(*a.algebra, a.element, o.cfg.bolsinov_trials,
                                                 split_seed(o.cfg.seed, "bolsinov/" + o.rep), o.cfg.coord_bound,
                                                 o.cfg.retries, o.cfg.t_extra);
  std::string verdict = "INCONCLUSIVE";
  out.code = kInconclusive;
  if (cert.found) {
    verdict = cert.condition4 ? "CERTIFIED" : "MISMATCH";
    out.code = cert.condition4 ? kOk : kError;
  }
  out.report["results"] = Json::array({Json{{"rep", o.rep}, {"certificate", to_json(cert)}, {"verdict", verdict}}});
  std::ostringstream text;
  text << o.type << o.rank << " " << o.rep << ": dim g^a " << cert.dim_centralizer << ", dim V " << cert.dim_v << " of "
       << cert.target_v << ", dim(g^a + V) " << cert.dim_sum << " of " << cert.target_sum << ", trials "
       << cert.trials_used << ", " << verdict << "  (" << fmt_seconds(timer.seconds()) << ")\n";
  out.text = text.str();
  return out;
}

Outcome run_selftest(const Options& o) {
  Outcome out;
  out.report = header("selftest", o);
  out.report["input"] = Json{{"table", o.table}};
  CheckContext ctx(o.table, o.cfg);
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& c : property_suites(ctx)) {
    results.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    text << (c.pass ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << c.detail << "\n";
    if (!c.pass) out.code = kError;
  }
  out.report["results"] = results;
  out.text = text.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.table = std::string(LIEIDX_DATA_DIR) + "/exceptional_rigid.orbits";
  try {
    env_override("TOOL_SEED", o.cfg.seed);
    env_override("TOOL_SAMPLES", o.cfg.samples);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kError;
  }

  CLI::App app{"Index certificates for centralizers of nilpotent elements"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", o.cfg.seed, "Run seed (env TOOL_SEED)");
  app.add_option("--samples", o.cfg.samples, "Functionals per index certificate (env TOOL_SAMPLES)");
  app.add_option("--coord-bound", o.cfg.coord_bound, "Random coordinates lie in [-B, B]");
  app.add_option("--t-extra", o.cfg.t_extra, "Extra samples confirming V_{x,y}");
  app.add_option("--retries", o.cfg.retries, "Redraws of a non-regular x");
  app.add_option("--trials", o.cfg.bolsinov_trials, "Bolsinov trials");
  app.add_option("--torus-candidates", o.cfg.torus_candidates, "Tori tried when a record has none");
  app.add_option("-o,--output", o.output, "Report destination, - for stdout");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-j,--jobs", o.jobs, "Sweep threads, 0 for all cores");

  auto* verify = app.add_subcommand("verify", "Verify the orbits of a table");
  verify->add_option("--table", o.table, "Orbit table")->required();
  verify->add_option("--label", o.label, "Only this record");

  auto* sweep_cmd = app.add_subcommand("sweep", "All nilpotent orbits of a classical algebra");
  sweep_cmd->add_option("--type", o.type, "A, B, C or D")->required();
  sweep_cmd->add_option("--rank", o.rank)->required();

  auto* index = app.add_subcommand("index", "Certified index of g^a");
  auto* bolsinov = app.add_subcommand("bolsinov", "Bolsinov witness for g^a");
  for (auto* sub : {index, bolsinov}) {
    sub->add_option("--type", o.type)->required();
    sub->add_option("--rank", o.rank)->required();
    sub->add_option("--rep", o.rep, "roots:<v>;<v>... or partition:<n1>,<n2>,...")->required();
  }

  auto* selftest = app.add_subcommand("selftest", "Run the property suites");
  selftest->add_option("--table", o.table, "Orbit table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  Outcome out;
  try {
    o.cfg.validate();
    if (*verify) out = run_verify(o);
    if (*sweep_cmd) out = run_sweep(o);
    if (*index) out = run_index(o);
    if (*bolsinov) out = run_bolsinov(o);
    if (*selftest) out = run_selftest(o);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kError;
  }
  out.report["exit_code"] = out.code;

  std::string body = o.format == "json" ? out.report.dump(2) + "\n" : out.text;
  if (o.output == "-") {
    std::cout << body;
  } else {
    std::ofstream f(o.output);
    if (!f || !(f << body)) {
      std::cerr << "error: cannot write " << o.output << "\n";
      return kError;
    }
  }
  return out.code;
}
