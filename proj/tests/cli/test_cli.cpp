#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "t5census/census.hpp"

#ifndef CLI_BIN
#error "CLI_BIN must point at the t5census executable"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  std::string path;
  TempDir() {
    char tmpl[] = "/tmp/t5cli.XXXXXX";
    path = mkdtemp(tmpl);
  }
  ~TempDir() { std::system(("rm -rf " + path).c_str()); }
};

}  // namespace

TEST_CASE("construct feeds check") {
  TempDir td;
  RunResult c = run("construct --family b3 --n 6");
  REQUIRE(c.exit_code == 0);
  std::string file = td.path + "/b3.txt";
  std::ofstream(file) << c.out;

  RunResult chk = run("check --input " + file + " --format json");
  CHECK(chk.exit_code == 0);
  CHECK(chk.out.find("\"contains_t5\": false") != std::string::npos);
  CHECK(chk.out.find("\"semibipartite\": true") != std::string::npos);
  CHECK(chk.out.find("\"edge_count\": 12") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs; counts worker-invariant") {
  RunResult a = run("census --n 4 --format json --no-cache --workers 1");
  RunResult b = run("census --n 4 --format json --no-cache --workers 1");
  RunResult c = run("census --n 4 --format json --no-cache --workers 4");
  REQUIRE(a.exit_code == 0);
  REQUIRE(c.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed") == std::string::npos);
  // worker count is echoed in the report, but every count must agree
  auto field = [](const RunResult& r, const char* key) {
    size_t at = r.out.find(key);
    REQUIRE(at != std::string::npos);
    size_t end = r.out.find('\n', at);
    return r.out.substr(at, end - at);
  };
  for (const char* key : {"\"i_n\"", "\"s_n\"", "\"t5_free\"", "\"total\"", "\"checksum\""})
    CHECK(field(a, key) == field(c, key));
  CHECK(field(a, "\"i_n\"") == "\"i_n\": \"16\",");
}

TEST_CASE("argument errors exit 2") {
  CHECK(run("check --no-such-flag").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("census --n 4 --format yaml --no-cache").exit_code == 2);
  CHECK(run("census --n 40 --no-cache").exit_code == 2);  // out of supported range
  CHECK(run("check --input /nonexistent/file.txt").exit_code == 2);
}

TEST_CASE("recompute flags a diverging cache and exits 1") {
  TempDir td;
  t5census::CensusReport fake = t5census::full_census(4);
  fake.i_n += 1;  // plausible-looking but wrong record; checksum is recomputed on save
  t5census::save_census_cache(fake, td.path);

  RunResult r = run("census --n 4 --recompute --cache-dir " + td.path + " --format json");
  CHECK(r.exit_code == 1);

  // an unreadable cache is rebuilt, and the rebuilt record is a hit next time
  std::ofstream(t5census::census_cache_path(td.path, 4)) << "garbage\n";
  RunResult ok = run("census --n 4 --cache-dir " + td.path + " --format json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"i_n\": \"16\"") != std::string::npos);
  CHECK(ok.out.find("\"cached\": false") != std::string::npos);
  RunResult cached = run("census --n 4 --cache-dir " + td.path + " --format json");
  CHECK(cached.exit_code == 0);
  CHECK(cached.out.find("\"cached\": true") != std::string::npos);
}

TEST_CASE("verify emits one line per criterion") {
  RunResult r = run("verify --suite primary --criterion 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("PASS  5 b3-argmax: ", 0) == 0);
  CHECK(r.out.find("PASS suite primary (1 criteria)") != std::string::npos);
}
