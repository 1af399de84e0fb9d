#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the tool from the source root so relative table paths are stable.
CliRun run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string out = (std::filesystem::temp_directory_path() /
                           ("lieidx_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++)))
                              .string();
  const std::string cmd = "cd '" + std::string(LIEIDX_SOURCE_DIR) + "' && " + env + " '" + LIEIDX_CLI + "' " + args +
                          " > '" + out + "' 2>/dev/null";
  int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  std::filesystem::remove(out);
  return r;
}

const std::string kTable = "--table data/exceptional_rigid.orbits";

}  // namespace

TEST(Cli, VerifyE7Dim41) {
  CliRun r = run("--format json verify " + kTable + " --label E7.dim41");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  const auto& v = j["results"][0];
  EXPECT_EQ(v["dim_centralizer"], 41);
  EXPECT_EQ(v["torus"]["dim_le"], 23);
  EXPECT_EQ(v["dim_center"], 2);
  EXPECT_EQ(v["torus"]["condition"], 1);
  EXPECT_EQ(v["index"]["stabilizer_dim"], 7);
  EXPECT_EQ(v["verdict"], "CERTIFIED");
  EXPECT_EQ(j["exit_code"], 0);
}

TEST(Cli, SweepB3) {
  CliRun r = run("--format json sweep --type B --rank 3");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  const auto& rep = j["results"][0];
  EXPECT_EQ(rep["algebra"], "B3");
  EXPECT_EQ(rep["rows"].size(), 15u);
  EXPECT_EQ(rep["valid_count"], 7);
}

TEST(Cli, IndexAndBolsinov) {
  EXPECT_EQ(run("index --type G --rank 2 --rep 'roots:0 1;3 1'").code, 0);
  EXPECT_EQ(run("bolsinov --type B --rank 2 --rep partition:3,1,1").code, 0);
  EXPECT_EQ(run("index --type C --rank 3 --rep partition:2,2,1,1").code, 0);
}

TEST(Cli, InconclusiveExitsTwo) {
  // seeds chosen so that the single draw misses a generic functional
  EXPECT_EQ(run("--seed 46 --samples 1 --coord-bound 1 index --type A --rank 2 --rep roots:").code, 2);
  EXPECT_EQ(run("--seed 32 --trials 1 --retries 1 --coord-bound 1 bolsinov --type A --rank 2 --rep roots:").code, 2);
  CliRun r = run("--seed 5 --samples 1 --coord-bound 1 verify " + kTable + " --label G2.dim6");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("STRUCTURE-CONFIRMED"), std::string::npos);
}

TEST(Cli, ErrorsExitOne) {
  EXPECT_EQ(run("verify --table /nonexistent/table").code, 1);
  EXPECT_EQ(run("verify " + kTable + " --bogus").code, 1);
  EXPECT_EQ(run("verify " + kTable + " --label nothing").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("index --type A --rank 2 --rep 'roots:1 x'").code, 1);
  EXPECT_EQ(run("index --type A --rank 2 --rep 'weights:1 0'").code, 1);
  EXPECT_EQ(run("index --type Q --rank 2 --rep roots:").code, 1);
  EXPECT_EQ(run("bolsinov --type B --rank 2 --rep partition:4,1").code, 1);
  EXPECT_EQ(run("sweep --type E --rank 6").code, 1);
  EXPECT_EQ(run("--samples 0 sweep --type A --rank 1").code, 1);
  EXPECT_EQ(run("sweep --type A --rank 1", "TOOL_SEED=abc").code, 1);
}

TEST(Cli, MismatchedTableExitsOne) {
  const auto path = std::filesystem::temp_directory_path() / ("lieidx_bad_" + std::to_string(::getpid()) + ".orbits");
  {
    std::ofstream f(path);
    f << "[orbit]\ntype = G\nrank = 2\nlabel = wrong\nrep_roots = 0 1\ndim_centralizer = 7\ndim_center = 1\n"
         "rigid = true\n";
  }
  CliRun r = run("--format json verify --table '" + path.string() + "'");
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rejected"].size(), 1u);
}

TEST(Cli, EnvironmentOverrides) {
  auto j = nlohmann::json::parse(run("--format json sweep --type A --rank 1", "TOOL_SEED=7 TOOL_SAMPLES=5").out);
  EXPECT_EQ(j["config"]["seed"], 7);
  EXPECT_EQ(j["config"]["samples"], 5);
  j = nlohmann::json::parse(run("--format json --seed 9 sweep --type A --rank 1", "TOOL_SEED=7").out);
  EXPECT_EQ(j["config"]["seed"], 9);
}

TEST(Cli, ReportIsDeterministic) {
  const std::string args = "--format json verify " + kTable + " --label F4.dim24";
  CliRun a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  CliRun s1 = run("--format json -j 1 sweep --type D --rank 4");
  CliRun s4 = run("--format json -j 4 sweep --type D --rank 4");
  EXPECT_EQ(s1.out, s4.out);
}

TEST(Cli, GoldenReport) {
  CliRun r = run("--format json verify " + kTable + " --label G2.dim8");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(LIEIDX_SOURCE_DIR) + "/tests/golden/verify_G2.dim8.json"));
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / ("lieidx_out_" + std::to_string(::getpid()) + ".json");
  CliRun r = run("--format json -o '" + path.string() + "' sweep --type A --rank 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  auto j = nlohmann::json::parse(slurp(path.string()));
  std::filesystem::remove(path);
  EXPECT_EQ(j["command"], "sweep");
}
