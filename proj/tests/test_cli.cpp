#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PERMDEG_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string cat(const std::string& rel) { return std::string(PERMDEG_CATALOG_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("mu and c on the worked examples") {
  auto mu = run("mu " + cat("phi3/G_3_3.pres") + " -p 5");
  CHECK(mu.code == 0);
  CHECK(mu.out.find("mu 625\n") != std::string::npos);
  CHECK(mu.out.find("certificate: 1 part\n") != std::string::npos);

  auto c = run("c " + cat("phi4/G_4_28.pres") + " -p 5 --cross-check");
  CHECK(c.code == 0);
  CHECK(c.out.find("c 175\n") != std::string::npos);
  CHECK(c.out.find("cross-check OK") != std::string::npos);

  CHECK(run("verify --all -p 5").code == 0);
  CHECK(run("verify --all -p 7 --workers 1").code == 0);
}

TEST_CASE("identical runs give identical output") {
  std::vector<std::string> cases = {"c " + cat("phi3/G_3_23.pres") + " -p 7", "verify --all -p 5 --workers 3",
                                    "mu " + cat("phi3/G_3_10r.pres") + " -p 5 --param r=nu --format json"};
  for (const auto& args : cases) {
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run("verify --all -p 5 --workers 1").out == run("verify --all -p 5 --workers 4").out);
}

TEST_CASE("json output") {
  auto r = run("mu " + cat("phi3/G_3_23.pres") + " -p 5 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "permdeg/1");
  CHECK(j["mu"] == 55);
  CHECK(j["group"]["order"] == 15625);
  CHECK(j["group"]["center_rank"] == 3);
  CHECK(j["group"]["cd"].is_object());
  CHECK(j["certificate"].size() == 3);
  CHECK(j["oracles"].is_array());

  auto v = nlohmann::json::parse(run("verify 'G_(3,23)' -p 5 --exact --format json").out);
  CHECK(v["reports"][0]["exact"]["value"] == 55);
}

TEST_CASE("certificate file is a permutation representation") {
  auto path = std::filesystem::temp_directory_path() / "permdeg_cli_cert.perm";
  auto r = run("mu " + cat("phi3/G_3_23.pres") + " -p 5 --certificate " + path.string());
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string word;
  std::size_t degree = 0;
  in >> word >> degree;
  CHECK(word == "degree");
  CHECK(degree == 55);
  std::string line;
  std::getline(in, line);
  int lines = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::set<std::size_t> seen;
    std::size_t x;
    while (ls >> x) seen.insert(x);
    CHECK(seen.size() == degree);
    CHECK(*seen.rbegin() == degree - 1);
    ++lines;
  }
  CHECK(lines == 6);
  std::filesystem::remove(path);
  CHECK(run("export " + cat("phi3/G_3_23.pres") + " -p 5").out.rfind("degree 55\n", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run("mu " + cat("phi3/G_3_3.pres") + " -p 4").code == 3);
  CHECK(run("mu " + cat("phi3/G_3_3.pres") + " -p 101").code == 3);
  CHECK(run("mu /nonexistent.pres -p 5").code == 3);
  CHECK(run("mu " + cat("phi3/G_3_10r.pres") + " -p 5 --param r=4").code == 3);
  CHECK(run("mu " + cat("phi3/G_3_3.pres") + " -p 5 --bogus").code == 3);
  CHECK(run("verify 'G_(9,9)' -p 5").code == 3);
  CHECK(run("mu " + cat("phi4/G_4_28.pres") + " -p 5 --budget 1 --max-subgroups 1").code == 2);
  CHECK(run("verify 'G_(4,28)' -p 5 --exact --budget 1 --max-subgroups 1").code == 2);

  // A catalog whose expected value is wrong.
  auto dir = std::filesystem::temp_directory_path() / "permdeg_cli_bad_catalog";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "expected.tsv");
    f << "G_(3,3)\t" << cat("phi3/G_3_3.pres") << "\t-\tp>=5\tsubgroups\texact\tp^4+p\ta3,a2\n";
  }
  CHECK(run("verify --all -p 5 --catalog " + dir.string()).code == 1);
  std::filesystem::remove_all(dir);
}
