#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

const std::string kCli = MIRRORCAT_CLI_PATH;
const fs::path kData = MIRRORCAT_DATA_DIR;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / ("mirrorcat_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("gen-affine output passes check-modular") {
  fs::path out = temp_dir() / "sl2_2.json";
  RunResult gen = run_cli("gen-affine --algebra sl2 --level 2 -o " + q(out));
  CHECK(gen.exit_code == 0);
  RunResult chk = run_cli("check-modular " + q(out));
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.find("overall: PASS") != std::string::npos);

  RunResult sln = run_cli("gen-affine --algebra sln --rank 3 --level 1 -o " + q(temp_dir() / "sl3_1.json"));
  CHECK(sln.exit_code == 0);
  CHECK(run_cli("check-modular " + q(temp_dir() / "sl3_1.json")).exit_code == 0);
}

TEST_CASE("mirror with a half-integer constituent fails and names the weight check") {
  RunResult r = run_cli("mirror " + q(kData / "gko_ising_branching.json") + " " + q(kData / "ext_with_l2.json"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL  extension.weight_integrality") != std::string::npos);
}

TEST_CASE("mirror of the trivial extension is the trivial extension of the other side") {
  fs::path out = temp_dir() / "mirrored.json";
  RunResult r = run_cli("mirror " + q(kData / "gko_ising_branching.json") + " " + q(kData / "trivial_ext.json") +
                        " -o " + q(out));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m_prime: {\"1\":1}") != std::string::npos);
  std::ifstream f(out);
  std::string written((std::istreambuf_iterator<char>(f)), {});
  CHECK(written.find("\"side\": 2") != std::string::npos);
  CHECK(written.find("\"1\": 1") != std::string::npos);
}

TEST_CASE("mirror of the level-rank simple-current extension") {
  RunResult r = run_cli("mirror " + q(kData / "levelrank_2_4.json") + " " + q(kData / "ext_l0_l4.json") +
                        " --format machine");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"(0,2,0)\": 1") != std::string::npos);
  CHECK(r.out.find("\"overall\": true") != std::string::npos);
}

TEST_CASE("check-extension rejects a category mismatch as an input error") {
  RunResult r = run_cli("check-extension " + q(kData / "gko_ising_branching.json") + " " +
                        q(kData / "ext_l0_l4.json"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("verlinde then check-ring round-trips through the CLI") {
  fs::path out = temp_dir() / "ring.json";
  RunResult v = run_cli("verlinde " + q(kData / "sl2_level3.json") + " -o " + q(out));
  CHECK(v.exit_code == 0);
  RunResult chk = run_cli("check-ring " + q(out));
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("search-branchings lists the coset branching") {
  RunResult r = run_cli("search-branchings " + q(kData / "sl2_level2.json") + " " + q(kData / "ising.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("found 2 branching(s)") != std::string::npos);
  CHECK(r.out.find("(l2,eps)") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and print the synopsis") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("check-modular").exit_code == 2);          // missing argument
  CHECK(run_cli("gen-affine --algebra sl2 -o /tmp/x.json").exit_code == 2);  // missing level
  CHECK(run_cli("check-modular /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("a failed mathematical check exits 1") {
  fs::path bad = temp_dir() / "bad.json";
  std::ofstream out(bad);
  out << R"({"kind":"modular","labels":["a","b"],
             "S":[[[0.72,0],[0.7071067811865476,0]],
                  [[0.7071067811865476,0],[-0.7071067811865476,0]]],
             "h":["0","1/4"],"c":"1"})";
  out.close();
  RunResult r = run_cli("check-modular " + q(bad));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("machine format is deterministic across runs and quiet is quiet") {
  std::string args = "check-branching " + q(kData / "levelrank_2_4.json") + " --format machine";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"overall\": true") != std::string::npos);

  RunResult quiet = run_cli("check-branching " + q(kData / "levelrank_2_4.json") + " --quiet");
  CHECK(quiet.exit_code == 0);
  CHECK(quiet.out.empty());
}

TEST_CASE("tolerance flag is honored") {
  // an absurdly tight tolerance makes the honest fixture fail its numeric
  // checks, which is exactly what --tol is for
  RunResult strict = run_cli("check-modular " + q(kData / "sl2_level2.json") + " --tol 1e-17");
  CHECK(strict.exit_code == 1);
  RunResult normal = run_cli("check-modular " + q(kData / "sl2_level2.json"));
  CHECK(normal.exit_code == 0);
}
