#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/classify.hpp"
#include "qlab/error.hpp"
#include "qlab/fixtures.hpp"
#include "qlab/io.hpp"
#include "support.hpp"

using namespace qlab;
using namespace qlab::testing;

namespace {

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::invalid_input;
}

}  // namespace

TEST_CASE("poset sup and inf") {
  auto d = fixtures::diamond();
  const auto& p = d.poset();
  Elem bot = p.index_of("bot"), l = p.index_of("left"), r = p.index_of("right"), top = p.index_of("top");
  CHECK(p.join(l, r) == top);
  CHECK(p.meet(l, r) == bot);
  CHECK(p.least() == bot);
  CHECK(p.greatest() == top);
  CHECK(p.sup(ElemSet{}) == bot);
  CHECK(p.inf(ElemSet{}) == top);
  CHECK(p.covers().size() == 4);

  auto anti = FinPoset::antichain({"a", "b"});
  CHECK_FALSE(anti.join(0, 1));
  CHECK_FALSE(anti.least());
}

TEST_CASE("validation errors") {
  StructureSpec s = fixtures::nonmonotone_chain();
  CHECK(code_of([&] { validate_structure(s); }) == Errc::non_monotone_mul);

  StructureSpec cyc{"CYC", {"a", "b"}, {{"a", "b"}, {"b", "a"}}, {{"a", "a"}, {"a", "a"}}, {}, {}};
  CHECK(code_of([&] { validate_structure(cyc); }) == Errc::cycle_in_order);

  StructureSpec unknown{"U", {"a"}, {}, {{"q"}}, {}, {}};
  CHECK(code_of([&] { validate_structure(unknown); }) == Errc::unknown_label);

  StructureSpec ragged{"R", {"a", "b"}, {}, {{"a", "a"}, {"a"}}, {}, {}};
  CHECK(exit_code(code_of([&] { validate_structure(ragged); })) == 1);

  StructureSpec bad_id{"I", {"a", "b"}, {}, {{"a", "a"}, {"a", "b"}}, std::string("a"), {}};
  CHECK(code_of([&] { validate_structure(bad_id); }) == Errc::invalid_input);
}

TEST_CASE("fixture classification") {
  auto q = classify(fixtures::chain3q());
  CHECK(q.quantale);
  CHECK(q.multiplicative_lattice);
  CHECK_FALSE(q.frame);
  CHECK(q.precoherent);

  auto b = classify(fixtures::bool2());
  CHECK(b.frame);
  CHECK(b.multiplicative_lattice);

  auto n = classify(fixtures::powerset_nonassoc());
  CHECK_FALSE(n.associative);
  CHECK(n.p);
  CHECK_FALSE(n.quantale);

  auto z = classify(fixtures::powerset_trivial_zero());
  CHECK(z.multiplicative_lattice);
  for (const auto& m : small_fixtures(8)) CHECK(implication_violations(classify(m)).empty());
}

TEST_CASE("literal flags agree with the fast path on random monoids") {
  Rng rng(101);
  for (int i = 0; i < 150; ++i) {
    auto m = random_ordered_monoid(rng, 5, i % 2 == 0);
    auto c = classify(m, {.literal = true, .strict = true});
    REQUIRE(c.literal);
    const auto& l = *c.literal;
    CAPTURE(structure_to_json(m).dump());
    CHECK(l.s == c.s);
    CHECK(l.ns == c.ns);
    CHECK(l.d == c.d);
    CHECK(l.bc == c.bc);
    CHECK(l.p == c.p);
    CHECK(l.np == c.np);
    CHECK(l.sp == c.sp);
    CHECK(l.ps == c.ps);
    CHECK(l.ms == c.ms);
    CHECK(l.t == c.t);
    CHECK(l.nr == c.nr);
    CHECK(l.compacts == compacts(m.poset()));
    CHECK(implication_violations(c).empty());
  }
}

TEST_CASE("residuals match the brute-force definition") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    auto m = random_ordered_monoid(rng, 5);
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem y = 0; y < m.size(); ++y) {
        CHECK(rdiv(m, x, y) == oracle_rdiv(m, x, y));
        CHECK(ldiv(m, y, x) == oracle_ldiv(m, y, x));
      }
  }
}

TEST_CASE("power set structures") {
  auto p = fixtures::powerset_c2();
  CHECK(p.name() == "2^C2");
  CHECK(p.size() == 4);
  auto c = classify(p);
  CHECK(c.quantale);
  CHECK(c.multiplicative_lattice);
  auto u = units_and_inverses(p);
  CHECK(u.units.size() == 2);

  auto ne = powerset_structure(cyclic_group(2), false, true);
  CHECK(ne.size() == 3);
  CHECK_FALSE(classify(ne).p);
  CHECK(classify(ne).np);

  auto z = powerset_structure(cyclic_group(2), true, false);
  CHECK(z.size() == 8);
  CHECK(z.powerset_info()->zero.has_value());
}

TEST_CASE("structure JSON round trip") {
  Rng rng(3);
  std::vector<FinOrderedMagma> all = small_fixtures(8);
  for (int i = 0; i < 50; ++i) all.push_back(random_ordered_monoid(rng, 5));
  for (const auto& m : all) {
    auto back = parse_structure(structure_to_json(m).dump());
    CHECK(back == m);
  }
}

TEST_CASE("map literals") {
  auto m = fixtures::chain3q();
  auto f = parse_map(m, "z:m, m:m ,u:u");
  CHECK(f == SelfMap{1, 1, 2});
  CHECK(parse_map(m, R"({"map": {"u": "u", "m": "m", "z": "m"}})") == f);
  CHECK(map_literal(m, f) == "z:m,m:m,u:u");
  CHECK(code_of([&] { parse_map(m, "z:m,m:m"); }) == Errc::invalid_input);
  CHECK(code_of([&] { parse_map(m, "z:q,m:m,u:u"); }) == Errc::unknown_label);

  auto p = fixtures::powerset_c2();
  auto g = parse_map(p, "{}:{},{e}:{e,g},{g}:{e,g},{e,g}:{e,g}");
  CHECK(g[p.poset().index_of("{e}")] == p.poset().index_of("{e,g}"));
}

TEST_CASE("units, cyclic elements and saturation") {
  auto q = fixtures::chain3q();
  auto u = units_and_inverses(q);
  CHECK(u.units.size() == 1);
  CHECK(is_cyclic(q, q.poset().index_of("m")));
  CHECK(is_sup_spanning(q, q.poset().all()));
  CHECK(lin_maps(q).size() >= 2);
}
