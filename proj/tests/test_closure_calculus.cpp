#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/classify.hpp"
#include "qlab/closure_calculus.hpp"
#include "qlab/error.hpp"
#include "qlab/fixtures.hpp"
#include "qlab/io.hpp"
#include "support.hpp"

using namespace qlab;
using namespace qlab::testing;

namespace {

SelfMap divisorial_oracle(const FinOrderedMagma& m, const std::vector<SelfMap>& nuclei, Elem a) {
  std::vector<SelfMap> fixing;
  for (const auto& f : nuclei)
    if (f[a] == a) fixing.push_back(f);
  auto best = oracle_max(m, fixing);
  REQUIRE(best);
  return *best;
}

}  // namespace

TEST_CASE("divisorial closure on chain3q") {
  auto m = fixtures::chain3q();
  auto v = divisorial(m, m.poset().index_of("m"));
  CHECK(v.map() == SelfMap{1, 1, 2});
  CHECK(divisorial(m, m.poset().index_of("u")).map() == SelfMap{2, 2, 2});
}

TEST_CASE("divisorial methods agree with the largest nucleus fixing a") {
  Rng rng(21);
  int cyclic = 0, lin = 0, two_sided = 0, semi_u = 0;
  for (int i = 0; i < 120; ++i) {
    auto f = random_family(rng, 6);
    auto m = family_structure(f, "F");
    auto nuclei = oracle_nuclei(m);
    CAPTURE(structure_to_json(m).dump());
    for (Elem a = 0; a < m.size(); ++a) {
      auto expected = divisorial_oracle(m, nuclei, a);
      CHECK(divisorial(m, a).map() == expected);
      for (auto [method, counter] : {std::pair{DivisorialMethod::lin, &lin}, std::pair{DivisorialMethod::cyclic, &cyclic},
                                     std::pair{DivisorialMethod::two_sided, &two_sided},
                                     std::pair{DivisorialMethod::semi_u, &semi_u}}) {
        if (!divisorial_applies(m, a, method)) continue;
        ++*counter;
        CHECK(divisorial(m, a, method).map() == expected);
      }
    }
  }
  CHECK(lin > 0);
  CHECK(cyclic > 0);
  CHECK(two_sided > 0);
}

TEST_CASE("reconstruction from divisorial closures") {
  Rng rng(22);
  for (int i = 0; i < 60; ++i) {
    auto m = family_structure(random_family(rng, 6), "F");
    for (const auto& star : enumerate_nuclei(m)) CHECK(reconstruct(m, star) == star);
  }
  for (const auto& m : small_fixtures(6)) {
    if (!classify(m).np) continue;
    for (const auto& star : enumerate_nuclei(m)) CHECK(reconstruct(m, star) == star);
  }
}

TEST_CASE("divisorial of a set is the meet") {
  auto m = fixtures::bool2();
  const auto& p = m.poset();
  auto v = divisorial_set(m, ElemSet{p.index_of("a"), p.index_of("b")});
  CHECK(v == identity_nucleus(m));
  CHECK(divisorial_set(m, ElemSet{}) == top_nucleus(m));
}

TEST_CASE("simplicity") {
  auto two = is_simple(fixtures::two());
  CHECK(two.simple);
  CHECK_FALSE(two.witness);

  auto q = is_simple(fixtures::chain3q());
  CHECK_FALSE(q.simple);
  REQUIRE(q.witness);
  CHECK(q.witness->is_nucleus());
  CHECK_FALSE(*q.witness == identity_nucleus(fixtures::chain3q()));
  CHECK_FALSE(*q.witness == top_nucleus(fixtures::chain3q()));

  for (const auto& m : small_fixtures(6)) {
    if (!classify(m).np) continue;
    CAPTURE(m.name());
    CHECK(is_simple(m).simple == (enumerate_nuclei(m).size() <= 2));
  }
}

TEST_CASE("finitary parts of finite structures") {
  for (const auto& m : small_fixtures(6)) {
    auto c = classify(m);
    if (!c.sp || !c.precoherent) continue;
    for (const auto& star : enumerate_nuclei(m)) CHECK(finitary_part(m, star) == star);
    for (Elem a = 0; a < m.size(); ++a) CHECK(t_of(m, a) == finitary_part(m, divisorial(m, a)));
  }
}

TEST_CASE("stable core on multiplicative lattices") {
  for (const auto& m : small_fixtures(6)) {
    if (!classify(m).multiplicative_lattice) continue;
    CAPTURE(m.name());
    auto nuclei = enumerate_nuclei(m);
    for (const auto& star : nuclei) {
      auto core = stable_core(m, star);
      CHECK(is_stable(m, core));
      CHECK(pointwise_leq(m, core.map(), star.map()));
      CHECK(is_stable(m, star) == oracle_is_stable(m, star.map()));
      auto c = stable_conditions(m, star);
      CHECK(c.definition == c.meet_one_residual);
      CHECK(c.definition == c.residual_meet_one);
      CHECK(c.definition == c.equals_core);
      CHECK(pointwise_leq(m, star_w(m, star).map(), star.map()));
    }
  }
}

TEST_CASE("stable hypotheses are enforced") {
  auto n = fixtures::powerset_nonassoc();
  CHECK_THROWS_AS(stable_core(n, identity_nucleus(n)), Error);
}

TEST_CASE("meets of stable nuclei") {
  auto m = fixtures::bool2();
  std::vector<NucleusMap> stable;
  for (const auto& star : enumerate_nuclei(m))
    if (is_stable(m, star)) stable.push_back(star);
  REQUIRE(stable.size() >= 2);
  auto meet = meet_preserves_stable(m, stable);
  CHECK(meet == identity_nucleus(m));
}
