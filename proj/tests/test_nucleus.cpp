#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qlab/classify.hpp"
#include "qlab/error.hpp"
#include "qlab/fixtures.hpp"
#include "qlab/io.hpp"
#include "qlab/nucleus_lattice.hpp"
#include "support.hpp"

using namespace qlab;
using namespace qlab::testing;

namespace {

std::vector<SelfMap> maps_of(const std::vector<NucleusMap>& v) {
  std::vector<SelfMap> out;
  for (const auto& n : v) out.push_back(n.map());
  std::sort(out.begin(), out.end());
  return out;
}

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

TEST_CASE("fixture counts") {
  CHECK(enumerate_closures(fixtures::chain3q()).size() == 4);
  CHECK(enumerate_nuclei(fixtures::chain3q()).size() == 3);
  CHECK(enumerate_closures(fixtures::bool2()).size() == 7);
  CHECK(enumerate_nuclei(fixtures::bool2()).size() == 4);
  CHECK(enumerate_nuclei(fixtures::one()).size() == 1);
}

TEST_CASE("enumeration matches brute force on random monoids") {
  Rng rng(11);
  for (int i = 0; i < 120; ++i) {
    auto m = random_ordered_monoid(rng, 5);
    CAPTURE(structure_to_json(m).dump());
    CHECK(maps_of(enumerate_closures(m)) == oracle_closures(m));
    auto nuclei = oracle_nuclei(m);
    CHECK(maps_of(enumerate_nuclei(m)) == nuclei);
    CHECK(maps_of(enumerate_nuclei(m, false)) == nuclei);
  }
}

TEST_CASE("check_map agrees with the axioms") {
  Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    auto m = random_ordered_monoid(rng, 4);
    MapChecker checker(m);
    for_each_map(m.size(), [&](const SelfMap& f) {
      auto r = checker.check(f);
      CHECK(r.is_closure == oracle_is_closure(m, f));
      CHECK(r.is_nucleus == oracle_is_nucleus(m, f));
      CHECK(r.is_preclosure == (r.expansive && r.monotone));
    });
  }
}

TEST_CASE("closure from fixed sets") {
  auto m = fixtures::chain3q();
  auto c = closure_from_fixed(m, ElemSet{1, 2});
  REQUIRE(c);
  CHECK(c->map() == SelfMap{1, 1, 2});
  CHECK_FALSE(closure_from_fixed(m, ElemSet{0, 1}));

  Rng rng(5);
  for (int i = 0; i < 80; ++i) {
    auto r = random_ordered_monoid(rng, 5);
    for (const auto& n : enumerate_closures(r)) {
      auto back = closure_from_fixed(r, n.fixed());
      REQUIRE(back);
      CHECK(*back == n);
    }
  }
}

TEST_CASE("residual criterion on near residuated monoids") {
  Rng rng(6);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto m = random_ordered_monoid(rng, 5);
    if (!is_near_residuated(m)) continue;
    for (const auto& n : enumerate_closures(m)) {
      auto r = residual_criterion(m, n.fixed());
      REQUIRE(r);
      CHECK(*r == n.is_nucleus());
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("closure of a preclosure is the least closure above it") {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    auto m = random_ordered_monoid(rng, 4);
    auto closures = oracle_closures(m);
    MapChecker checker(m);
    for_each_map(m.size(), [&](const SelfMap& f) {
      auto r = checker.check(f);
      if (!r.is_preclosure) return;
      auto c = closure_of_preclosure(m, f);
      CHECK(oracle_leq(m, f, c.map()));
      for (const auto& other : closures)
        if (oracle_leq(m, f, other)) CHECK(oracle_leq(m, c.map(), other));
    });
  }
}

TEST_CASE("nucleus lattice operations") {
  for (const auto& m : small_fixtures(6)) {
    CAPTURE(m.name());
    auto lat = nucleus_lattice(m);
    auto oracle = oracle_nuclei(m);
    REQUIRE(lat.nuclei.size() == oracle.size());
    for (std::size_t i = 0; i < lat.nuclei.size(); ++i)
      for (std::size_t j = 0; j < lat.nuclei.size(); ++j) {
        const auto& a = lat.nuclei[i];
        const auto& b = lat.nuclei[j];
        std::vector<NucleusMap> pair{a, b};
        auto glb = oracle_glb(m, oracle, a.map(), b.map());
        auto lub = oracle_lub(m, oracle, a.map(), b.map());
        REQUIRE(glb);
        REQUIRE(lub);
        CHECK(meet_nuclei(m, pair).map() == *glb);
        CHECK(join_nuclei(m, pair).map() == *lub);
        CHECK(lat.nuclei[*lat.meet(i, j)].map() == *glb);
        CHECK(lat.nuclei[*lat.join(i, j)].map() == *lub);
      }
    CHECK(meet_nuclei(m, {}) == top_nucleus(m));
    CHECK(join_nuclei(m, {}) == identity_nucleus(m));
  }
}

TEST_CASE("quotients are ordered magmas on the fixed set") {
  auto m = fixtures::chain3q();
  auto star = NucleusMap::make(m, {1, 1, 2});
  auto q = quotient(m, star);
  CHECK(q.size() == 2);
  CHECK(q.label(0) == "m");
  CHECK(q.mul(0, 0) == 0);
  CHECK(classify(q).multiplicative_lattice);
}

TEST_CASE("induced nuclei") {
  auto m = fixtures::chain4max();
  const auto& p = m.poset();
  Elem z = p.index_of("z"), u = p.index_of("u"), s = p.index_of("s"), t = p.index_of("t");

  // N = {z, u} carries the identity; the largest extension sends the rest to t.
  SubNucleus down{ElemSet{z, u}, {z, u, 0, 0}};
  auto upper = induce_upper(m, down);
  CHECK(upper.map() == SelfMap{z, u, t, t});

  SubNucleus all{p.all(), {z, s, s, t}};
  CHECK(induce_lower(m, all).map() == SelfMap{z, s, s, t});
  CHECK(code_of([&] { induce_lower(m, SubNucleus{ElemSet{t}, {0, 0, 0, t}}); }) == Errc::hypothesis_not_met);
}

TEST_CASE("ideal and module systems on power sets") {
  auto p = powerset_structure(cyclic_group(1), true, false);
  const auto& q = p.poset();
  auto idx = [&](const char* l) { return q.index_of(l); };
  SelfMap ideal(p.size());
  ideal[idx("{}")] = idx("{0}");
  ideal[idx("{0}")] = idx("{0}");
  ideal[idx("{e}")] = idx("{e,0}");
  ideal[idx("{e,0}")] = idx("{e,0}");
  auto r = system_predicates(p, ideal);
  CHECK(r.is_nucleus);
  CHECK(r.is_ideal_system);
  CHECK(r.is_module_system);
  CHECK(r.ideal_by_definition == r.is_ideal_system);

  CHECK(code_of([&] { system_predicates(fixtures::powerset_c2(), identity_map(4)); }) ==
        Errc::not_a_powerset_structure);
}

TEST_CASE("system predicates agree with their definitions") {
  for (std::size_t n : {1, 2}) {
    auto p = powerset_structure(cyclic_group(n), true, false);
    for (const auto& star : enumerate_closures(p)) {
      auto r = system_predicates(p, star.map());
      CHECK(r.is_module_system == r.module_by_definition);
      CHECK(r.is_weak_ideal_system == r.weak_ideal_by_definition);
      CHECK(r.is_ideal_system == r.ideal_by_definition);
    }
  }
}

TEST_CASE("nuclei induced from singletons of 2^C2") {
  auto m = fixtures::powerset_c2();
  const auto& p = m.poset();
  ElemSet n{p.index_of("{}"), p.index_of("{e}"), p.index_of("{g}")};
  REQUIRE(m.closed_under_mul(n));
  REQUIRE(is_sup_spanning(m, n));
  auto lower = induce_lower(m, SubNucleus{n, identity_map(m.size())});
  CHECK(lower == identity_nucleus(m));
}
