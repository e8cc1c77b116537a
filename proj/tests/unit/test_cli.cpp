#include <doctest.h>

#include <sstream>

#include "fibcl/cli.hpp"

using namespace fibcl;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fib") {
  const auto r = run({"fib", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "21\n");
  CHECK(run({"fib", "--n", "100"}).out == "354224848179261915075\n");
}

TEST_CASE("classify in JSON") {
  const auto r = run({"classify", "--beta1", "1", "--beta2", "-1", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("clifford_class":"Division")") != std::string::npos);
  CHECK(r.out.find(R"j("canonical":"H(1,1)")j") != std::string::npos);
}

TEST_CASE("classify text report shows n' = 1 for H(-1/2,-1/2)") {
  const auto r = run({"classify", "--beta1", "-1/2", "--beta2", "-1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n′ = 1") != std::string::npos);
  CHECK(r.out.find("clifford class = Split") != std::string::npos);
}

TEST_CASE("output is byte-stable") {
  const std::vector<std::vector<std::string>> cmds = {
      {"classify", "--beta1", "-2", "--beta2", "-3", "--json"},
      {"nprime", "--beta1", "2", "--beta2", "-3", "--p", "4", "--q", "-7", "--json"},
      {"clifford-table", "--squares", "2,-1/3,5", "--json"},
      {"selftest", "--json"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("nprime") {
  const auto r = run({"nprime", "--beta1", "-1/2", "--beta2", "-1/2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("n_prime":1)") != std::string::npos);
  const auto g = run({"nprime", "--beta1", "1", "--beta2", "-1", "--p", "0", "--q", "1", "--json"});
  CHECK(g.code == 0);
  CHECK(g.out.find(R"("n_prime":0)") != std::string::npos);
  CHECK(g.out.find(R"("limit_sign":-1)") != std::string::npos);
}

TEST_CASE("quaternion commands") {
  const auto m = run({"quat-mul", "--beta1", "1", "--beta2", "1", "--x", "0,1,0,0", "--y", "0,0,1,0"});
  CHECK(m.code == 0);
  CHECK(m.out == "0,0,0,1\n");
  const auto n = run({"quat-norm", "--beta1", "1", "--beta2", "-1", "--x", "1,1,2,3"});
  CHECK(n.code == 0);
  CHECK(n.out == "-11\n");
}

TEST_CASE("clifford-table") {
  const auto r = run({"clifford-table", "--squares", "-1,-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension = 4") != std::string::npos);
  CHECK(run({"clifford-table", "--squares", "1,1,1,1,1,1,1,1"}).code == 0);
  CHECK(run({"clifford-table", "--squares", "1,1,1,1,1,1,1,1,1"}).code == cli::kExitUsage);
  CHECK(run({"clifford-table", "--squares", "1,0"}).code == cli::kExitUsage);
}

TEST_CASE("selftest exit code") {
  const auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit 1 and print the grammar") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"fib"},
      {"fib", "--n", "8", "--bogus"},
      {"fib", "--n", "-1"},
      {"classify", "--beta1", "1"},
      {"classify", "--beta1", "0.5", "--beta2", "1"},
      {"classify", "--beta1", "1", "--beta2", "1", "--p", "1"},
      {"quat-mul", "--beta1", "1", "--beta2", "1", "--x", "1,2,3", "--y", "0,0,0,1"},
  };
  for (const auto& args : bad) {
    const auto r = run(args);
    CAPTURE(args.size());
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("usage:") != std::string::npos);
  }
}

TEST_CASE("vanishing E' exits 2") {
  const auto r = run({"nprime", "--beta1", "1", "--beta2", "-1", "--p", "0", "--q", "0"});
  CHECK(r.code == cli::kExitIndeterminate);
  CHECK(r.err.find("EIndeterminate") != std::string::npos);
  CHECK(run({"classify", "--beta1", "1", "--beta2", "-1", "--p", "0", "--q", "0"}).code ==
        cli::kExitIndeterminate);
}

TEST_CASE("domain errors name the error and the values") {
  const auto r = run({"classify", "--beta1", "0", "--beta2", "1"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("EInvalidParams") != std::string::npos);
}

}  // TEST_SUITE
