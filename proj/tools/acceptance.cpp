// One PASS/FAIL line per acceptance criterion. All comparisons are exact;
// the only tolerances are the wall-clock budgets below.
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "checks.hpp"

using namespace lieidx;
using namespace lieidx::tool;

namespace {

// Seconds. Criterion 4 bounds the whole run up to and including itself.
const std::map<int, double> kBudget = {{1, 120.0}, {2, 600.0}, {4, 1800.0}, {8, 60.0}};

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  std::string table = std::string(LIEIDX_DATA_DIR) + "/exceptional_rigid.orbits";
  std::vector<int> only;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--seed", cfg.seed);
  app.add_option("--table", table);
  app.add_option("-c,--criterion", only, "Run only these criteria")->check(CLI::Range(1, kCriteria));
  CLI11_PARSE(app, argc, argv);

  std::set<int> chosen(only.begin(), only.end());
  if (chosen.empty()) {
    for (int n = 1; n <= kCriteria; ++n) chosen.insert(n);
  }
  CheckContext ctx(table, cfg);
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (int n : chosen) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = acceptance_criterion(ctx, n);
    } catch (const std::exception& ex) {
      r = CheckResult{std::to_string(n), "criterion " + std::to_string(n), false, std::string("error: ") + ex.what()};
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double own = std::chrono::duration<double>(t1 - t0).count();
    const double total = std::chrono::duration<double>(t1 - start).count();
    std::ostringstream timing;
    timing << std::fixed << std::setprecision(1) << own << " s";
    if (auto it = kBudget.find(n); it != kBudget.end()) {
      const double used = n == 4 ? total : own;
      if (used > it->second) {
        r.pass = false;
        r.detail += "; over the " + std::to_string(static_cast<long>(it->second)) + " s budget";
      }
    }
    all = all && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << ": " << r.detail
              << " [exact; " << timing.str() << "]" << std::endl;
  }
  return all ? 0 : 1;
}
