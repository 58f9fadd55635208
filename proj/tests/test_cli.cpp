#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

const std::string kCli = ROUGHCOMB_CLI_PATH;

int run(const std::string& args) {
  std::string cmd = "\"" + kCli + "\" " + args;
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "roughcomb_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("> /dev/null 2>&1") == 2);
  CHECK(run("frobnicate > /dev/null 2>&1") == 2);
  CHECK(run("density-interval --grid 1 > /dev/null 2>&1") == 2);
  CHECK(run("mc-interval --dist gauss --trials 10 --teeth 10 > /dev/null 2>&1") == 2);
  CHECK(run("pstar sphere > /dev/null 2>&1") == 2);
  CHECK(run("verify --profile slow > /dev/null 2>&1") == 2);
}

TEST_CASE("help and version exit cleanly") {
  CHECK(run("--help > /dev/null 2>&1") == 0);
  CHECK(run("--version > /dev/null 2>&1") == 0);
  CHECK(run("mc-interval --help > /dev/null 2>&1") == 0);
}

TEST_CASE("survival points appear on stdout") {
  fs::path out = scratch_dir() / "pstar_stdout.txt";
  CHECK(run("pstar interval --mu 0.5 --mu 0 > \"" + out.string() + "\"") == 0);
  std::string text = slurp(out);
  CHECK(text.find("mu,p_star") != std::string::npos);
  CHECK(text.find("0.5,0.25231481481481477") != std::string::npos);
  CHECK(text.find("0,1") != std::string::npos);
}

TEST_CASE("density tables are byte-stable across reruns") {
  fs::path dir = scratch_dir();
  fs::path a = dir / "dens_a.csv";
  fs::path b = dir / "dens_b.csv";
  CHECK(run("density-interval --grid 20 --out \"" + a.string() + "\" > /dev/null") == 0);
  CHECK(run("density-interval --grid 20 --out \"" + b.string() + "\" > /dev/null") == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("a1,a2,p\n") == 0);

  fs::path c = dir / "dens_circle.csv";
  CHECK(run("density-circle --grid 15 --out \"" + c.string() + "\" > /dev/null") == 0);
  CHECK(slurp(c).find("theta1,theta2,p_T\n") == 0);
}

TEST_CASE("simulation runs emit a histogram and a manifest, reproducibly") {
  fs::path dir = scratch_dir();
  fs::path a = dir / "run_a.csv";
  fs::path b = dir / "run_b.csv";
  std::string flags = "mc-interval --teeth 50 --trials 200 --seed 9 --bins 5 --out ";
  CHECK(run(flags + "\"" + a.string() + "\" > /dev/null") == 0);
  CHECK(run(flags + "\"" + b.string() + "\" > /dev/null") == 0);

  CHECK(slurp(a) == slurp(b));
  std::string manifest = slurp(dir / "run_a.json");
  CHECK(manifest == slurp(dir / "run_b.json"));
  CHECK(manifest.find("\"master_seed\": 9") != std::string::npos);
  CHECK(manifest.find("\"kind\": \"interval\"") != std::string::npos);
  CHECK(manifest.find("\"degenerate_count\"") != std::string::npos);
}
