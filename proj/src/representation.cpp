#include "qlab/representation.hpp"

#include "qlab/classify.hpp"
#include "qlab/error.hpp"
#include "qlab/isomorphism.hpp"
#include "qlab/limits.hpp"

namespace qlab {

namespace {

bool join_semilattice(const FinPoset& p) {
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = x + 1; y < p.size(); ++y)
      if (!p.join(x, y)) return false;
  return true;
}

bool keeps_joins(const MagmaMorphism& f) {
  const auto& s = f.source.poset();
  const auto& t = f.target.poset();
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = x + 1; y < s.size(); ++y) {
      auto j = s.join(x, y);
      if (!j) continue;
      if (t.join(f.map[x], f.map[y]) != std::optional<Elem>(f.map[*j])) return false;
    }
  return true;
}

std::string ideal_label(const FinOrderedMagma& m, ElemSet ideal) {
  if (auto top = m.poset().greatest_of(ideal)) return "↓" + m.label(*top);
  std::string s = "{";
  for (Elem x : ideal) s += (s.size() > 1 ? "," : "") + m.label(x);
  return s + "}";
}

Elem ideal_index(const IdealStructure& idl, ElemSet ideal) {
  for (Elem i = 0; i < idl.ideals.size(); ++i)
    if (idl.ideals[i] == ideal) return i;
  fail(Errc::invalid_input, "set is not an ideal of " + idl.base.name());
}

FinOrderedMagma compact_part(const FinOrderedMagma& m, std::vector<Elem>& index) {
  const ElemSet k = compacts(m.poset());
  index.assign(m.size(), 0);
  Elem i = 0;
  for (Elem x : k) index[x] = i++;
  return substructure(m, k, "K(" + m.name() + ")");
}

}  // namespace

ElemSet down_set(const FinOrderedMagma& m, ElemSet x) {
  const auto& p = m.poset();
  p.require_masked();
  if (x.empty()) fail(Errc::invalid_input, "down set of the empty set");
  if (!join_semilattice(p)) fail(Errc::hypothesis_not_met, m.name() + " is not a join semilattice");
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem a : x)
      for (Elem b : x) {
        Elem j = *p.join(a, b);
        if (!x.contains(j)) {
          x.insert(j);
          grew = true;
        }
      }
  }
  return p.down_closure(x);
}

IdealStructure ideal_completion(const FinOrderedMagma& m) {
  if (!classify(m).ms) fail(Errc::hypothesis_not_met, m.name() + " is not a multiplicative semilattice");
  const auto& p = m.poset();
  if (m.size() > limits().subset_quantification)
    fail(Errc::size_limit_exceeded, "ideal enumeration scans all " + std::to_string(m.size()) + "-element subsets");
  IdealStructure idl{m, {}, {}};
  for (ElemSet::Mask s = 1; s < (ElemSet::Mask{1} << m.size()); ++s) {
    ElemSet x(s);
    if (p.is_down_closed(x) && p.is_directed(x)) idl.ideals.push_back(x);
  }
  std::vector<std::string> labels;
  for (ElemSet i : idl.ideals) labels.push_back(ideal_label(m, i));
  std::vector<std::pair<Elem, Elem>> pairs;
  const auto k = static_cast<Elem>(idl.ideals.size());
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      if (i != j && idl.ideals[i].subset_of(idl.ideals[j])) pairs.emplace_back(i, j);
  std::vector<Elem> table;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) table.push_back(ideal_index(idl, down_set(m, m.product(idl.ideals[i], idl.ideals[j]))));
  idl.structure = FinOrderedMagma("Idl(" + m.name() + ")", FinPoset::from_pairs(labels, pairs), std::move(table));
  return idl;
}

MagmaMorphism make_morphism(const FinOrderedMagma& source, const FinOrderedMagma& target, SelfMap map) {
  if (map.size() != source.size()) fail(Errc::not_a_morphism, "map has wrong length");
  for (Elem v : map)
    if (v >= target.size()) fail(Errc::not_a_morphism, "map leaves the target");
  for (Elem x = 0; x < source.size(); ++x)
    for (Elem y = 0; y < source.size(); ++y) {
      if (source.leq(x, y) && !target.leq(map[x], map[y]))
        fail(Errc::not_a_morphism, "map is not order-preserving at " + source.label(x) + " <= " + source.label(y));
      if (map[source.mul(x, y)] != target.mul(map[x], map[y]))
        fail(Errc::not_a_morphism, "map is not multiplicative at " + source.label(x) + ", " + source.label(y));
    }
  MagmaMorphism f{source, target, std::move(map)};
  f.ordered_magma = true;
  const auto cs = classify(source), ct = classify(target);
  const bool joins = keeps_joins(f);
  f.multiplicative_semilattice = cs.ms && ct.ms && joins;
  f.near_prequantale = cs.np && ct.np && joins;
  if (f.near_prequantale && cs.precoherent && ct.precoherent) {
    const ElemSet kt = compacts(target.poset());
    f.precoherent = true;
    for (Elem x : compacts(source.poset())) f.precoherent = f.precoherent && kt.contains(f.map[x]);
  }
  return f;
}

MagmaMorphism compose(const MagmaMorphism& g, const MagmaMorphism& f) {
  if (!(f.target == g.source)) fail(Errc::invalid_input, "morphisms are not composable");
  return make_morphism(f.source, g.target, qlab::compose(g.map, f.map));
}

MagmaMorphism identity_morphism(const FinOrderedMagma& m) { return make_morphism(m, m, identity_map(m.size())); }

bool same_map(const MagmaMorphism& a, const MagmaMorphism& b) {
  return a.source == b.source && a.target == b.target && a.map == b.map;
}

MagmaMorphism unit_iso(const FinOrderedMagma& m) {
  auto idl = ideal_completion(m);
  std::vector<Elem> kindex;
  auto k = compact_part(idl.structure, kindex);
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) f[x] = kindex[ideal_index(idl, m.poset().down(x))];
  if (!is_isomorphism(m, k, f)) fail(Errc::isomorphism_failure, "x ↦ ↓x is not an isomorphism onto K(Idl(M))");
  return make_morphism(m, k, std::move(f));
}

MagmaMorphism counit_iso(const FinOrderedMagma& l) {
  auto c = classify(l);
  if (!c.np || !c.precoherent) fail(Errc::hypothesis_not_met, l.name() + " is not a precoherent near prequantale");
  const ElemSet kset = compacts(l.poset());
  std::vector<Elem> kindex;
  auto k = compact_part(l, kindex);
  const auto kelems = kset.elements();
  auto idl = ideal_completion(k);
  SelfMap f(idl.ideals.size());
  for (Elem i = 0; i < idl.ideals.size(); ++i) {
    ElemSet in_l;
    for (Elem x : idl.ideals[i]) in_l.insert(kelems[x]);
    auto s = l.poset().sup(in_l);
    if (!s) fail(Errc::isomorphism_failure, "ideal without supremum");
    f[i] = *s;
  }
  if (!is_isomorphism(idl.structure, l, f)) fail(Errc::isomorphism_failure, "I ↦ sup I is not an isomorphism onto L");
  return make_morphism(idl.structure, l, std::move(f));
}

MagmaMorphism k_functor(const MagmaMorphism& f) {
  if (!f.precoherent) fail(Errc::not_a_morphism, "K needs a morphism of precoherent near prequantales");
  std::vector<Elem> si, ti;
  auto ks = compact_part(f.source, si);
  auto kt = compact_part(f.target, ti);
  SelfMap g(ks.size());
  for (Elem x : compacts(f.source.poset())) g[si[x]] = ti[f.map[x]];
  return make_morphism(ks, kt, std::move(g));
}

MagmaMorphism idl_functor(const MagmaMorphism& g) {
  if (!g.multiplicative_semilattice) fail(Errc::not_a_morphism, "Idl needs a morphism of multiplicative semilattices");
  auto is = ideal_completion(g.source);
  auto it = ideal_completion(g.target);
  SelfMap h(is.ideals.size());
  for (Elem i = 0; i < is.ideals.size(); ++i) {
    ElemSet image;
    for (Elem x : is.ideals[i]) image.insert(g.map[x]);
    h[i] = ideal_index(it, down_set(g.target, image));
  }
  return make_morphism(is.structure, it.structure, std::move(h));
}

}  // namespace qlab
