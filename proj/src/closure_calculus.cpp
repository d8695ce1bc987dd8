#include "qlab/closure_calculus.hpp"

#include "qlab/classify.hpp"
#include "qlab/error.hpp"
#include "qlab/limits.hpp"
#include "qlab/nucleus_lattice.hpp"

namespace qlab {

namespace {

NucleusMap as_nucleus(const FinOrderedMagma& q, SelfMap f, const char* what) {
  auto r = NucleusMap::try_make(q, std::move(f));
  if (!r || !r->is_nucleus()) fail(Errc::hypothesis_not_met, std::string(what) + " did not produce a nucleus on " + q.name());
  return *r;
}

// For each x, the sup of all y with x ∈ S_f ⇒ y ∈ S_f, S_f = {x : f(x) <= a}.
NucleusMap from_tests(const FinOrderedMagma& q, const std::vector<ElemSet>& tests, const char* what) {
  const auto& p = q.poset();
  SelfMap f(q.size());
  for (Elem x = 0; x < q.size(); ++x) {
    ElemSet cand = p.all();
    for (ElemSet s : tests)
      if (s.contains(x)) cand &= s;
    auto sup = p.sup(cand);
    if (!sup) fail(Errc::hypothesis_not_met, std::string(what) + ": no supremum for " + q.label(x));
    f[x] = *sup;
  }
  return as_nucleus(q, std::move(f), what);
}

NucleusMap by_lin(const FinOrderedMagma& q, Elem a) {
  std::vector<ElemSet> tests;
  for (const auto& f : lin_maps(q)) {
    ElemSet s;
    for (Elem x = 0; x < q.size(); ++x)
      if (q.leq(f[x], a)) s.insert(x);
    tests.push_back(s);
  }
  return from_tests(q, tests, "Lin formula");
}

NucleusMap by_two_sided(const FinOrderedMagma& q, Elem a) {
  std::vector<ElemSet> tests;
  for (Elem r = 0; r < q.size(); ++r)
    for (Elem s = 0; s < q.size(); ++s) {
      ElemSet t;
      for (Elem x = 0; x < q.size(); ++x)
        if (q.leq(q.mul(q.mul(r, x), s), a)) t.insert(x);
      tests.push_back(t);
    }
  return from_tests(q, tests, "rxs formula");
}

NucleusMap by_cyclic(const FinOrderedMagma& q, Elem a) {
  const auto top = q.top();
  SelfMap f(q.size());
  for (Elem x = 0; x < q.size(); ++x) {
    auto l = rdiv(q, a, x);
    auto r = ldiv(q, x, a);
    if (l && r) {
      auto v = rdiv(q, a, *l);
      if (!v) fail(Errc::hypothesis_not_met, "a/(a/x) undefined");
      f[x] = *v;
    } else {
      if (!top) fail(Errc::hypothesis_not_met, "cyclic formula needs a top element");
      f[x] = *top;
    }
  }
  return as_nucleus(q, std::move(f), "cyclic formula");
}

NucleusMap by_semi_u(const FinOrderedMagma& q, Elem a) {
  const auto units = units_and_inverses(q).units;
  ElemSet uav;
  for (Elem u : units)
    for (Elem v : units) uav.insert(q.mul(q.mul(u, a), v));
  SelfMap f(q.size());
  for (Elem x = 0; x < q.size(); ++x) {
    auto inf = q.poset().inf(uav & q.poset().up(x));
    if (!inf) fail(Errc::hypothesis_not_met, "semi-U formula: no infimum for " + q.label(x));
    f[x] = *inf;
  }
  return as_nucleus(q, std::move(f), "semi-U formula");
}

}  // namespace

bool divisorial_applies(const FinOrderedMagma& q, Elem a, DivisorialMethod method) {
  if (a >= q.size()) fail(Errc::invalid_input, "element out of range");
  switch (method) {
    case DivisorialMethod::lin:
      return classify(q).np;
    case DivisorialMethod::two_sided:
      return q.is_monoid() && classify(q).np;
    case DivisorialMethod::cyclic:
      return q.is_monoid() && is_cyclic(q, a) && (is_residuated(q) || (is_near_residuated(q) && q.top()));
    case DivisorialMethod::semi_u: {
      auto c = classify(q);
      return q.is_monoid() && c.semi_u_lattice;
    }
    case DivisorialMethod::automatic:
      return divisorial_applies(q, a, DivisorialMethod::cyclic) || divisorial_applies(q, a, DivisorialMethod::lin);
  }
  return false;
}

NucleusMap divisorial(const FinOrderedMagma& q, Elem a, DivisorialMethod method) {
  if (method == DivisorialMethod::automatic)
    method = divisorial_applies(q, a, DivisorialMethod::cyclic) ? DivisorialMethod::cyclic : DivisorialMethod::lin;
  if (!divisorial_applies(q, a, method))
    fail(Errc::hypothesis_not_met, "divisorial formula does not apply to " + q.name() + " at " + q.label(a));
  switch (method) {
    case DivisorialMethod::two_sided:
      return by_two_sided(q, a);
    case DivisorialMethod::cyclic:
      return by_cyclic(q, a);
    case DivisorialMethod::semi_u:
      return by_semi_u(q, a);
    default:
      return by_lin(q, a);
  }
}

NucleusMap divisorial_set(const FinOrderedMagma& q, ElemSet s) {
  std::vector<NucleusMap> vs;
  for (Elem a : s) vs.push_back(divisorial(q, a));
  return meet_nuclei(q, vs);
}

NucleusMap reconstruct(const FinOrderedMagma& q, const NucleusMap& star) {
  if (!star.is_nucleus()) fail(Errc::invalid_input, "reconstruct needs a nucleus");
  auto r = divisorial_set(q, star.fixed());
  if (!(r == star)) fail(Errc::reconstruction_mismatch, "meet of divisorial closures differs from the nucleus");
  return r;
}

SimpleReport is_simple(const FinOrderedMagma& q) {
  if (!classify(q).np) fail(Errc::hypothesis_not_met, q.name() + " is not a near prequantale");
  const Elem top = *q.top();
  const auto d = identity_nucleus(q);
  SimpleReport rep;
  for (Elem a = 0; a < q.size(); ++a) {
    if (a == top) continue;
    auto v = divisorial(q, a);
    if (!(v == d)) {
      rep.witness = std::move(v);
      return rep;
    }
    rep.checked.push_back(a);
  }
  rep.simple = true;
  return rep;
}

NucleusMap finitary_part(const FinOrderedMagma& q, const NucleusMap& star) {
  auto c = classify(q);
  if (!c.sp || !c.precoherent) fail(Errc::hypothesis_not_met, q.name() + " is not a precoherent semiprequantale");
  if (!star.is_nucleus()) fail(Errc::invalid_input, "finitary part needs a nucleus");
  const auto& p = q.poset();
  const ElemSet k = compacts(p);
  SelfMap f(q.size());
  for (Elem x = 0; x < q.size(); ++x) {
    ElemSet images;
    for (Elem y : k & p.down(x)) images.insert(star(y));
    auto sup = p.sup(images);
    if (!sup) fail(Errc::hypothesis_not_met, "no supremum of compact images below " + q.label(x));
    f[x] = *sup;
  }
  return as_nucleus(q, std::move(f), "finitary part");
}

NucleusMap t_of(const FinOrderedMagma& q, Elem a) { return finitary_part(q, divisorial(q, a)); }

ElemSet gv_elements(const FinOrderedMagma& q, const NucleusMap& star) {
  auto one = q.identity();
  if (!one) fail(Errc::hypothesis_not_met, q.name() + " is not unital");
  ElemSet gv;
  for (Elem z : q.poset().down(*one))
    if (star(z) == star(*one)) gv.insert(z);
  return gv;
}

void require_stable_hypotheses(const FinOrderedMagma& q) {
  auto c = classify(q);
  if (!c.sp || !q.associative() || !q.commutative() || !q.unital())
    fail(Errc::hypothesis_not_met, q.name() + " is not a semimultiplicative lattice");
  if (!c.precoherent) fail(Errc::hypothesis_not_met, q.name() + " is not precoherent");
  const Elem one = *q.identity();
  for (Elem t : compacts(q.poset()))
    for (Elem x = 0; x < q.size(); ++x)
      if (!rdiv(q, x, t)) fail(Errc::hypothesis_not_met, "compact element " + q.label(t) + " is not residuated");
  for (Elem x = 0; x < q.size(); ++x)
    if (!q.poset().meet(x, one)) fail(Errc::hypothesis_not_met, "no meet of " + q.label(x) + " and 1");
}

NucleusMap stable_core(const FinOrderedMagma& q, const NucleusMap& star) {
  require_stable_hypotheses(q);
  if (!star.is_nucleus()) fail(Errc::invalid_input, "stable core needs a nucleus");
  const ElemSet gv = gv_elements(q, star);
  SelfMap f(q.size());
  for (Elem x = 0; x < q.size(); ++x) {
    ElemSet quotients;
    for (Elem z : gv) quotients.insert(*rdiv(q, x, z));
    auto sup = q.poset().sup(quotients);
    if (!sup) fail(Errc::hypothesis_not_met, "no supremum of x/z for " + q.label(x));
    f[x] = *sup;
  }
  return as_nucleus(q, std::move(f), "stable core");
}

NucleusMap star_w(const FinOrderedMagma& q, const NucleusMap& star) { return stable_core(q, finitary_part(q, star)); }

namespace {

bool meets_preserved(const FinOrderedMagma& q, const NucleusMap& star) {
  const auto& p = q.poset();
  bool lattice = true;
  for (Elem x = 0; x < q.size() && lattice; ++x)
    for (Elem y = 0; y < q.size() && lattice; ++y) lattice = p.meet(x, y).has_value();
  if (lattice) {
    for (Elem x = 0; x < q.size(); ++x)
      for (Elem y = 0; y < q.size(); ++y)
        if (star(*p.meet(x, y)) != *p.meet(star(x), star(y))) return false;
    return true;
  }
  // without all pairwise meets every finite subset has to be examined
  if (q.size() > limits().subset_quantification) fail(Errc::size_limit_exceeded, "meet check needs all subsets");
  for (ElemSet::Mask m = 1; m < (ElemSet::Mask{1} << q.size()); ++m) {
    ElemSet x(m);
    if (x.size() < 2) continue;
    auto inf = p.inf(x);
    if (!inf) continue;
    ElemSet images;
    for (Elem e : x) images.insert(star(e));
    if (p.inf(images) != std::optional<Elem>(star(*inf))) return false;
  }
  return true;
}

bool residuals_preserved(const FinOrderedMagma& q, const NucleusMap& star) {
  for (Elem t : compacts(q.poset()))
    for (Elem x = 0; x < q.size(); ++x) {
      if (auto l = rdiv(q, x, t)) {
        auto r = rdiv(q, star(x), t);
        if (!r || star(*l) != *r) return false;
      }
      if (auto l = ldiv(q, t, x)) {
        auto r = ldiv(q, t, star(x));
        if (!r || star(*l) != *r) return false;
      }
    }
  return true;
}

}  // namespace

bool is_stable(const FinOrderedMagma& q, const NucleusMap& star) {
  if (!is_near_residuated(q)) fail(Errc::hypothesis_not_met, q.name() + " is not near residuated");
  if (!star.is_nucleus()) return false;
  return meets_preserved(q, star) && residuals_preserved(q, star);
}

StableConditions stable_conditions(const FinOrderedMagma& q, const NucleusMap& star) {
  require_stable_hypotheses(q);
  const auto& p = q.poset();
  const Elem one = *q.identity();
  const ElemSet k = compacts(p);
  StableConditions c;
  c.definition = is_stable(q, star);

  bool two = true, three = true;
  for (Elem x = 0; x < q.size(); ++x) {
    if (star(*p.meet(x, one)) != p.meet(star(x), star(one))) two = false;
    for (Elem t : k) {
      const Elem xt = *rdiv(q, x, t);
      const Elem sxt = *rdiv(q, star(x), t);
      if (star(xt) != sxt) two = false;
      if (star(*p.meet(xt, one)) != p.meet(sxt, star(one))) three = false;
    }
  }
  c.meet_one_residual = two;
  c.residual_meet_one = three;
  c.equals_core = stable_core(q, star) == star;
  return c;
}

NucleusMap meet_preserves_stable(const FinOrderedMagma& q, std::span<const NucleusMap> gamma) {
  if (!classify(q).np) fail(Errc::hypothesis_not_met, q.name() + " is not a near prequantale");
  for (const auto& g : gamma)
    if (!is_stable(q, g)) fail(Errc::invalid_input, "family member is not stable");
  auto m = meet_nuclei(q, gamma);
  if (!is_stable(q, m)) fail(Errc::stability_lost, "meet of stable nuclei is not stable");
  return m;
}

}  // namespace qlab
