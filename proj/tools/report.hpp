#pragma once

#include <string>

#include "json.hpp"
#include "lieidx/classical.hpp"
#include "lieidx/elashvili.hpp"

namespace lieidx::tool {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// Process exit codes.
enum Exit : int { kOk = 0, kError = 1, kInconclusive = 2 };

/// Worst of two exit codes: error beats inconclusive beats ok.
int worse(int a, int b);

Json to_json(const RunConfig& cfg);
Json to_json(const IndexCertificate& c);
Json to_json(const BolsinovCertificate& c);
Json to_json(const TorusStage& st);
Json to_json(const OrbitVerdict& v);
Json to_json(const ClassicalSweepReport& r);

/// Exit code for one orbit: 1 on a structural mismatch, 2 unless CERTIFIED.
int exit_code(const OrbitVerdict& v);
/// 1 on a row error or failed rigid row, 2 if a valid row lacks a certificate.
int exit_code(const ClassicalSweepReport& r);

/// Algebra element named by a --rep value:
///   roots:<v>;<v>;...   sum of root vectors, each v in simple-root coordinates
///   partition:<n1>,<n2>,...   nilpotent of that Jordan type (classical types)
struct Representative {
  const LieAlgebra* algebra = nullptr;
  Element element;
  std::string text;
};

Representative parse_rep(AlgebraCache& cache, char type, int rank, const std::string& rep);

/// One summary line per orbit, human readable.
std::string text_line(const OrbitVerdict& v);
std::string text_lines(const ClassicalSweepReport& r);

}  // namespace lieidx::tool
