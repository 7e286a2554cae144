#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = true) {
  Run r;
  std::string cmd = std::string("'") + TESSGROWTH_CLI_PATH + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze") {
  auto r = run("analyze '[4,6,14]'");
  CHECK(r.code == 0);
  CHECK(has(r.out, "1.6180"));
  CHECK(has(r.out, "Monomorphic"));
  CHECK(has(r.out, "NonConcentric"));
  CHECK(has(r.out, "6-valent or 14-valent"));
  CHECK_FALSE(has(r.out, "INCONSISTENT"));

  r = run("analyze '[4,4,6,8]' --variant T1");
  CHECK(r.code == 0);
  CHECK(has(r.out, "4.13016"));

  r = run("analyze '[3,3,3]'");
  CHECK(r.code == 0);
  CHECK(has(r.out, "Finite"));
  CHECK(has(r.out, "no growth computation"));

  r = run("analyze '[4,6,14]' --json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["growth_truncated"] == "1.6180");
  CHECK(j["consistent"] == true);
  CHECK(j["sources"].size() == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("analyze '[4,4,6,8]'").code == 2);
  CHECK(run("analyze '[4,6'").code == 2);
  CHECK(run("table nonsense").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("simulate '[7,7,7]' --root 5").code == 2);
  CHECK(run("verify everything").code == 2);
}

TEST_CASE("classify") {
  auto r = run("classify '[3,3,5,3,5]' --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["morphism"] == "Monomorphic");
  CHECK(j["concentricity"] == "NonConcentric");
  CHECK(j["recommended_root"] == 5);
}

TEST_CASE("simulate") {
  auto r = run("simulate '[7,7,7]' --root vertex -n 6 --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  auto f = j["faces"].get<std::vector<long long>>();
  REQUIRE(f.size() == 6);
  for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] > f[i - 1]);
  CHECK(j["tau_ratios"].back().get<double>() == doctest::Approx(2.62).epsilon(0.02));

  r = run("simulate '[3,3,5,3,5]' --root 3 -n 4");
  CHECK(has(r.out, "not concentric"));
  CHECK(has(r.out, "pendant"));

  r = run("simulate '[4,4,6,8]' --policy T2 -n 9 --json");
  j = nlohmann::json::parse(r.out);
  CHECK(j["faces"].get<std::vector<long long>>() ==
        std::vector<long long>{4, 28, 108, 468, 1900, 7956, 32868, 136380, 565956});
}

TEST_CASE("table") {
  auto r = run("table least-growth", false);
  CHECK(r.out.substr(0, r.out.find('\n')) == "class,sequence,printed,computed,full,golden,match");
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 37);

  r = run("table pqrstu-minimal --json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 60);
  CHECK(j["mismatches"] == 0);
  CHECK(r.code == 0);

  r = run("table 4468-coronas --max-n 9 --json");
  j = nlohmann::json::parse(r.out);
  CHECK(r.code == 0);
  CHECK(j["mismatches"] == 0);
  CHECK(j["rows"][8]["T1 simulator"] == "573610");
  CHECK(j["rows"][8]["T2 simulator"] == "565956");

  // byte-stable
  CHECK(run("table pqrst-minimal").out == run("table pqrst-minimal").out);
}

TEST_CASE("verify formulas") {
  auto r = run("verify formulas");
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS"));
}

TEST_CASE("export") {
  auto r = run("export '[4,6,14]' --json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["sequence"] == "[4,6,14]");
  CHECK(j["char_poly"] == "z^4 - 3z^2 + 1");
  r = run("export catalog");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["families"].size() > 50);
}
