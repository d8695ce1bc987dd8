#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qlab/classify.hpp"
#include "qlab/cli.hpp"
#include "qlab/io.hpp"

using namespace qlab;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(QLAB_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("counts") {
  CHECK(call({"nuclei", "count", fixture("chain3q.json")}).out == "3\n");
  CHECK(call({"closures", "count", fixture("bool2.json")}).out == "7\n");
  CHECK(call({"moore", "count", "3"}).out == "61\n");
  CHECK(call({"moore", "count", "4", "--threads", "4"}).out == "2480\n");
}

TEST_CASE("exit codes") {
  auto bad = call({"classify", fixture("nonmonotone.json")});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("error: NonMonotoneMul\n", 0) == 0);

  auto big = call({"moore", "count", "6"});
  CHECK(big.code == 3);
  CHECK(big.err.rfind("error: SizeLimitExceeded\n", 0) == 0);

  auto hyp = call({"roundtrip", fixture("nonmonotone.json")});
  CHECK(hyp.code == 1);

  auto stable = call({"stable", fixture("diamond.json"), "bot:bot,left:left,right:right,top:top"});
  CHECK(stable.code == 0);

  CHECK(call({}).code == 1);
  CHECK(call({"nuclei"}).code == 1);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"--limit", "2", "nuclei", "count", fixture("chain3q.json")}).code == 3);
}

TEST_CASE("simple is a verdict, not an error") {
  auto r = call({"simple", fixture("chain3q.json")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("simple: no\n", 0) == 0);
}

TEST_CASE("JSON nucleus listing") {
  auto r = call({"nuclei", "list", fixture("chain3q.json"), "--json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[1]["map"]["z"] == "m");
  CHECK(j[1]["kind"] == "nucleus");
}

TEST_CASE("exported structures classify again") {
  auto p = call({"powerset", "--cyclic", "2", "--zero"});
  REQUIRE(p.code == 0);
  auto m = parse_structure(p.out);
  CHECK(classify(m).multiplicative_lattice);

  auto i = call({"idl", fixture("chain4max.json"), "--json"});
  REQUIRE(i.code == 0);
  CHECK(parse_structure(i.out).size() == 4);

  auto base = call({"powerset", fixture("c2.json")});
  CHECK(base.out == call({"powerset", "--cyclic", "2"}).out);
}

TEST_CASE("dedekind verbs") {
  auto s = call({"dedekind", "sstar", "--primes", "2", "--dot"});
  REQUIRE(s.code == 0);
  CHECK(s.out.rfind("7\ndigraph", 0) == 0);
  CHECK(call({"dedekind", "apply", "--primes", "2", "--op", "star1", "--elem", "1,-2"}).out == "(1,F)\n");
  CHECK(call({"dedekind", "apply", "--primes", "2", "--op", "e", "--elem", "1,-2,3"}).code == 1);
  auto v = call({"dedekind", "verify", "--primes", "2", "--samples", "500"});
  CHECK(v.code == 0);
  CHECK(v.out.find("ok\n") != std::string::npos);
}

TEST_CASE("output does not depend on the thread count") {
  CHECK(call({"moore", "count", "5", "--threads", "1"}).out == call({"moore", "count", "5", "--threads", "0"}).out);
}

TEST_CASE("check-map and divisorial") {
  auto r = call({"check-map", fixture("chain3q.json"), fixture("chain3q_nucleus.json"), "--json"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["nucleus"] == true);
  CHECK(j["map_adjoint"] == true);
  CHECK(call({"divisorial", fixture("chain3q.json"), "m"}).out == "{m,u}  z:m,m:m,u:u  nucleus\n");
  CHECK(call({"divisorial", fixture("chain3q.json"), "--reconstruct", "z:m,m:m,u:u"}).code == 0);
}
