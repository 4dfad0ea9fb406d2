#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out = "/tmp/codeglab_test_out.txt";
  const std::string err = "/tmp/codeglab_test_err.txt";
  std::string cmd = std::string(CODEGLAB_CLI_PATH) + " " + args + " >" + out +
                    " 2>" + err;
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("analyze emits a report and exits 0 on agreement") {
  auto r = run_cli("analyze --builtin symmetric:4 --prime 2");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("\"direct_hp\":true") != std::string::npos);
  REQUIRE(r.out.find("\"cases_a\":[\"4\"]") != std::string::npos);
  REQUIRE(r.out.find("\"direct_hp_star\":false") != std::string::npos);
}

TEST_CASE("analyze mirrors its report to --out") {
  auto r = run_cli(
      "analyze --builtin symmetric:3 --prime 2 --out /tmp/codeglab_a.jsonl");
  REQUIRE(r.code == 0);
  REQUIRE(slurp("/tmp/codeglab_a.jsonl") == r.out);
  REQUIRE_FALSE(r.out.empty());
}

TEST_CASE("analyze on an excluded group still exits 0") {
  auto r = run_cli("analyze --builtin quaternion8 --prime 2");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("\"direct_hp\":false") != std::string::npos);
  REQUIRE(r.out.find("\"cases_a\":[]") != std::string::npos);
  REQUIRE(r.out.find("\"degree\":2,\"codegree\":4") != std::string::npos);
}

TEST_CASE("repeatable primes give one report line each") {
  auto r = run_cli("analyze --builtin symmetric:3 --prime 2 --prime 3");
  REQUIRE(r.code == 0);
  REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') == 2);
  REQUIRE(r.out.find("\"cases_a\":[\"2\"]") != std::string::npos);
  REQUIRE(r.out.find("\"cases_a\":[\"1\"]") != std::string::npos);
}

TEST_CASE("non-prime argument is a usage error") {
  auto r = run_cli("analyze --builtin symmetric:4 --prime 4");
  REQUIRE(r.code == 1);
  REQUIRE(r.err.find("prime expected") != std::string::npos);
}

TEST_CASE("missing source is a usage error") {
  auto r = run_cli("analyze --prime 2");
  REQUIRE(r.code == 1);
}

TEST_CASE("chartab output shape") {
  SECTION("three rows for the 3-cycle group") {
    auto r = run_cli("chartab --builtin cyclic:3");
    REQUIRE(r.code == 0);
    REQUIRE(std::count(r.out.begin(), r.out.end(), '\n') == 3);
  }
  SECTION("degree and codegree columns for S4") {
    auto r = run_cli("chartab --builtin symmetric:4");
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::vector<std::uint64_t> degrees;
    bool saw_codegree_3_on_degree_2 = false;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::uint64_t d, cod;
      ls >> d >> cod;
      degrees.push_back(d);
      if (d == 2 && cod == 3) saw_codegree_3_on_degree_2 = true;
    }
    std::sort(degrees.begin(), degrees.end());
    REQUIRE(degrees == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
    REQUIRE(saw_codegree_3_on_degree_2);
  }
  SECTION("mathieu11: ten rows, squares summing to the order") {
    auto r = run_cli("chartab --builtin mathieu11");
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    std::uint64_t rows = 0, sumsq = 0;
    while (std::getline(is, line)) {
      std::istringstream ls(line);
      std::uint64_t d;
      ls >> d;
      ++rows;
      sumsq += d * d;
    }
    REQUIRE(rows == 10);
    REQUIRE(sumsq == 7920);
  }
  SECTION("beyond the cap: exit 1 naming the cap") {
    auto r = run_cli("chartab --builtin symmetric:20");
    REQUIRE(r.code == 1);
    REQUIRE(r.err.find("1000000") != std::string::npos);
  }
}

TEST_CASE("classify gives the structural side only") {
  auto r = run_cli("classify --builtin sl2:9 --prime 3");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("\"cases_a\":[\"6b\"]") != std::string::npos);
  REQUIRE(r.out.find("direct_hp") == std::string::npos);
}

TEST_CASE("file ingestion through the CLI") {
  std::string dir = CODEGLAB_DATA_DIR;
  auto r = run_cli("analyze --file " + dir + "/sl2_5_f3_4.pgr --prime 3");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("\"cases_a\":[\"7c\"]") != std::string::npos);
  auto bad = run_cli("analyze --file /nonexistent.pgr --prime 3");
  REQUIRE(bad.code == 1);
}

TEST_CASE("verify-corpus negative control and filters") {
  std::string dir = CODEGLAB_DATA_DIR;
  SECTION("filtered subcorpus runs clean and deterministically") {
    auto a = run_cli("verify-corpus --data-dir " + dir +
                     " --filter Gamma --workers 1 --out /tmp/codeglab_w1.jsonl");
    REQUIRE(a.code == 0);
    auto b = run_cli("verify-corpus --data-dir " + dir +
                     " --filter Gamma --workers 3 --out /tmp/codeglab_w3.jsonl");
    REQUIRE(b.code == 0);
    REQUIRE(slurp("/tmp/codeglab_w1.jsonl") == slurp("/tmp/codeglab_w3.jsonl"));
    REQUIRE_FALSE(slurp("/tmp/codeglab_w1.jsonl").empty());
  }
  SECTION("flipped expectation is reported and exits 2") {
    auto r = run_cli("verify-corpus --data-dir " + dir + " --filter A7 --flip A7:3");
    REQUIRE(r.code == 2);
    REQUIRE(r.out.find("FAIL A7") != std::string::npos);
  }
  SECTION("empty corpus is a data error") {
    auto r = run_cli("verify-corpus --data-dir " + dir + " --filter NOMATCH");
    REQUIRE(r.code == 1);
    REQUIRE((r.out + r.err).find("empty corpus") != std::string::npos);
  }
  SECTION("fail-fast still reports the failure") {
    auto r = run_cli("verify-corpus --data-dir " + dir +
                     " --filter A7 --flip A7:3 --fail-fast");
    REQUIRE(r.code == 2);
  }
}

TEST_CASE("worker count from the environment") {
  std::string dir = CODEGLAB_DATA_DIR;
  auto r = run_cli("verify-corpus --data-dir " + dir + " --filter C6");
  REQUIRE(r.code == 0);
  setenv("CODEGLAB_WORKERS", "2", 1);
  auto r2 = run_cli("verify-corpus --data-dir " + dir + " --filter C6");
  unsetenv("CODEGLAB_WORKERS");
  REQUIRE(r2.code == 0);
}
