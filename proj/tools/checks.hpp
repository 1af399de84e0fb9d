#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lieidx/classical.hpp"
#include "lieidx/elashvili.hpp"

namespace lieidx::tool {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Shared state for the checks: the shipped table and its verdicts,
/// computed once on first use.
class CheckContext {
 public:
  CheckContext(std::string table_path, RunConfig cfg);

  const RunConfig& config() const { return cfg_; }
  AlgebraCache& cache() { return cache_; }
  const std::vector<OrbitRecord>& records();
  /// Verifies only the named record on first use.
  const OrbitVerdict& verdict(const std::string& label);
  /// Every record, in table order.
  std::vector<OrbitVerdict> verdicts();

 private:
  std::string path_;
  RunConfig cfg_;
  AlgebraCache cache_;
  std::vector<OrbitRecord> records_;
  bool loaded_ = false;
  std::map<std::string, OrbitVerdict> verdicts_;
};

/// Bolsinov witnesses for the induced nonzero orbits of one algebra.
struct InducedWitnesses {
  std::string algebra;
  std::vector<std::string> orbits;
  std::vector<BolsinovCertificate> certificates;

  std::size_t witnessed() const;
};

InducedWitnesses induced_witnesses(CheckContext& ctx, char type, int rank);

/// The property suites, one result each.
std::vector<CheckResult> property_suites(CheckContext& ctx);

/// Acceptance criteria 1..8.
CheckResult acceptance_criterion(CheckContext& ctx, int n);
inline constexpr int kCriteria = 8;

}  // namespace lieidx::tool
