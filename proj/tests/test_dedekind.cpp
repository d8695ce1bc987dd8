#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qlab/dedekind.hpp"
#include "qlab/error.hpp"

using namespace qlab;

namespace {

DedekindElem E(const char* s) { return parse_dedekind(s); }

}  // namespace

TEST_CASE("fractional ideal arithmetic") {
  CHECK(dmul(E("1,-2"), E("2,F")) == E("3,F"));
  CHECK(dleq(E("2,1"), E("1,1")));
  CHECK_FALSE(dleq(E("1,1"), E("2,1")));
  CHECK(dleq(E("5,3"), E("F,3")));
  std::vector<DedekindElem> xs{E("1,3"), E("2,-1")};
  CHECK(dsup(xs) == E("1,-1"));
  CHECK(dinf(xs) == E("2,3"));
  CHECK(ddiv(E("1,1"), E("3,-2")) == E("-2,3"));
  CHECK(ddiv(E("F,1"), E("F,0")) == E("F,1"));
  CHECK_FALSE(ddiv(E("1,1"), E("F,0")));
  CHECK(E("(1,F)").str() == "(1,F)");
  CHECK(E("1,F").support() == 2u);
  CHECK(E("0,0").is_compact());
  CHECK_THROWS_AS(parse_dedekind("1,x"), Error);
}

TEST_CASE("residuals are adjoint to multiplication") {
  auto xs = sample_dedekind(2, 60, 17, 4);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      auto r = ddiv(x, y);
      if (!r) continue;
      CHECK(dleq(dmul(*r, y), x));
      for (const auto& z : xs)
        if (dleq(dmul(z, y), x)) CHECK(dleq(z, *r));
    }
}

TEST_CASE("compact elements have witnesses only when not compact") {
  auto chain = compactness_witness(E("F,2"), 6);
  REQUIRE(chain.size() == 6);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(dleq(chain[i], chain[i + 1]));
  for (const auto& c : chain) CHECK_FALSE(dleq(E("F,2"), c));
  CHECK(dleq(dsup(chain), E("F,2")));
}

TEST_CASE("named operations") {
  const int n = 2;
  auto x = E("1,-2");
  CHECK(op_d(n)(x) == x);
  CHECK(op_e(n)(x) == DedekindElem::full(n));
  CHECK(op_v(n)(x) == x);
  CHECK(op_v(n)(E("F,1")) == DedekindElem::full(n));
  CHECK(op_star(n, 1)(x) == E("1,F"));
  CHECK(op_star(n, 2)(x) == E("F,-2"));
  CHECK(parse_op(n, "star1").family == op_star(n, 1).family);
  CHECK(parse_op(n, "⋆1∧v").family == op_meet(op_star(n, 1), op_v(n)).family);
  CHECK(op_name(op_meet(op_star(n, 1), op_v(n))) == "⋆1∧v");
  CHECK(op_name(parse_op(n, "[[1],[1,2]]")) == "⋆2");
  CHECK(op_v_of(E("0,0")).family == op_v(n).family);
}

TEST_CASE("semistar enumeration for two primes") {
  auto r = enumerate_sstar(2);
  REQUIRE(r.ops.size() == 7);
  std::set<std::string> names(r.names.begin(), r.names.end());
  CHECK(names == std::set<std::string>{"d", "e", "v", "⋆1", "⋆2", "⋆1∧v", "⋆2∧v"});
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [lo, hi] : r.hasse) edges.emplace(r.names[lo], r.names[hi]);
  std::set<std::pair<std::string, std::string>> expected{
      {"d", "⋆1∧v"}, {"d", "⋆2∧v"}, {"⋆1∧v", "⋆1"}, {"⋆1∧v", "v"}, {"⋆2∧v", "⋆2"},
      {"⋆2∧v", "v"}, {"⋆1", "e"},   {"⋆2", "e"},    {"v", "e"}};
  CHECK(edges == expected);
  auto dot = sstar_dot(r);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 9);

  auto one = enumerate_sstar(1);
  std::set<std::string> n1(one.names.begin(), one.names.end());
  CHECK(n1 == std::set<std::string>{"d", "e"});
}

TEST_CASE("left inverse and order embedding") {
  for (int n = 1; n <= 3; ++n) {
    auto fams = enumerate_moore(n);
    for (const auto& f : fams) CHECK(left_inverse(DedekindSemistar{f}) == f);
    for (const auto& a : fams)
      for (const auto& b : fams) {
        DedekindSemistar sa{a}, sb{b};
        const bool leq = op_leq(sa, sb);
        CHECK(leq == ((b.members & ~a.members) == 0));
        if (!leq) {
          auto w = order_witness(sa, sb);
          REQUIRE(w);
          CHECK_FALSE(dleq(sa(*w), sb(*w)));
        }
      }
  }
}

TEST_CASE("finitary part and stable core") {
  auto op = op_star(3, 2);
  auto f = dedekind_finitary(op);
  CHECK(f(E("1,2,3")) == op(E("1,2,3")));
  CHECK(dedekind_stable(op).family == f.family);
  CHECK(dedekind_is_gv(op, E("F,0,F")) == false);
  CHECK(dedekind_is_gv(op, E("0,0,0")));
  DedekindBackend b(3);
  auto bases = sample_dedekind(3, 8, 5);
  auto chains = b.chains(bases);
  for (int n = 1; n <= 3; ++n)
    for (const auto& fam : enumerate_moore(n)) {
      DedekindBackend bn(n);
      auto base = sample_dedekind(n, 6, 9);
      auto cat = bn.chains(base);
      DedekindSemistar s{fam};
      CHECK_FALSE(probe_finitary(bn, dedekind_finitary(s), std::span<const DirectedChain<DedekindElem>>(cat)));
    }
  CHECK_FALSE(chains.empty());
}

TEST_CASE("integers with infinities") {
  ZInfBackend plain(false), both(true);
  auto w = plain.window(-50, 50);
  CHECK_FALSE(probe_double_residual(plain, std::span<const ZVal>(w)));
  auto wb = both.window(-5, 5);
  CHECK(probe_double_residual(both, std::span<const ZVal>(wb)));
  CHECK(plain.show(ZVal{ZVal::pos_inf, 0}) == "inf");
  auto c = [](const ZVal& x) { return zinf_collapse(x); };
  CHECK_FALSE(probe_nucleus(both, c, std::span<const ZVal>(wb)));
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(op_d(2)(E("1,2,3")), Error);
  CHECK_THROWS_AS(parse_op(2, "star3"), Error);
}
