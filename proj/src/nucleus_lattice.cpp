#include "qlab/nucleus_lattice.hpp"

#include "qlab/classify.hpp"
#include "qlab/error.hpp"

namespace qlab {

namespace {

bool bounded_complete(const FinPoset& p) {
  for (Elem x = 0; x < p.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y)
      if (!p.join(x, y) && !(p.up(x) & p.up(y)).empty()) return false;
  return true;
}

void check_family(const FinOrderedMagma& m, std::span<const NucleusMap> gamma) {
  for (const auto& g : gamma)
    if (g.size() != m.size() || !g.is_nucleus()) fail(Errc::invalid_input, "family member is not a nucleus on " + m.name());
}

}  // namespace

std::optional<std::size_t> NucleusLattice::index_of(const NucleusMap& n) const {
  for (std::size_t i = 0; i < nuclei.size(); ++i)
    if (nuclei[i] == n) return i;
  return std::nullopt;
}

std::optional<std::size_t> NucleusLattice::meet(std::size_t i, std::size_t j) const {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < nuclei.size(); ++k) {
    if (!leq[k][i] || !leq[k][j]) continue;
    if (!best || leq[*best][k]) best = k;
  }
  if (!best) return std::nullopt;
  for (std::size_t k = 0; k < nuclei.size(); ++k)
    if (leq[k][i] && leq[k][j] && !leq[k][*best]) return std::nullopt;
  return best;
}

std::optional<std::size_t> NucleusLattice::join(std::size_t i, std::size_t j) const {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < nuclei.size(); ++k) {
    if (!leq[i][k] || !leq[j][k]) continue;
    if (!best || leq[k][*best]) best = k;
  }
  if (!best) return std::nullopt;
  for (std::size_t k = 0; k < nuclei.size(); ++k)
    if (leq[i][k] && leq[j][k] && !leq[*best][k]) return std::nullopt;
  return best;
}

NucleusLattice nucleus_lattice(const FinOrderedMagma& m) {
  NucleusLattice l;
  l.nuclei = enumerate_nuclei(m);
  const std::size_t k = l.nuclei.size();
  l.leq.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) l.leq[i][j] = pointwise_leq(m, l.nuclei[i].map(), l.nuclei[j].map());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !l.leq[i][j]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < k && cover; ++c)
        if (c != i && c != j && l.leq[i][c] && l.leq[c][j]) cover = false;
      if (cover) l.hasse.emplace_back(i, j);
    }
  return l;
}

NucleusMap meet_nuclei(const FinOrderedMagma& m, std::span<const NucleusMap> gamma) {
  check_family(m, gamma);
  if (gamma.empty()) return top_nucleus(m);
  if (!bounded_complete(m.poset()))
    fail(Errc::hypothesis_not_met, m.name() + " is not bounded complete; pointwise meets need not exist");
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    ElemSet images;
    for (const auto& g : gamma) images.insert(g(x));
    auto inf = m.poset().inf(images);
    if (!inf) fail(Errc::hypothesis_not_met, "no infimum of the images of " + m.label(x));
    f[x] = *inf;
  }
  auto r = NucleusMap::make(m, std::move(f));
  if (!r.is_nucleus()) fail(Errc::hypothesis_not_met, "pointwise meet is not a nucleus");
  return r;
}

NucleusMap join_nuclei(const FinOrderedMagma& m, std::span<const NucleusMap> gamma) {
  check_family(m, gamma);
  if (gamma.empty()) return identity_nucleus(m);
  auto c = classify(m);
  if (!c.np && !(c.bc && c.nr))
    fail(Errc::hypothesis_not_met, m.name() + " is neither a near prequantale nor bounded complete and near residuated");
  ElemSet fix = m.poset().all();
  for (const auto& g : gamma) fix &= g.fixed();
  auto r = closure_from_fixed(m, fix);
  if (!r || !r->is_nucleus()) fail(Errc::hypothesis_not_met, "intersection of fixed sets does not give a nucleus");
  return *r;
}

namespace {

void check_sub_nucleus(const FinOrderedMagma& m, const SubNucleus& s) {
  if (s.map.size() != m.size()) fail(Errc::invalid_input, "map has wrong length");
  if (s.carrier.empty()) fail(Errc::invalid_input, "submagma is empty");
  if (!m.closed_under_mul(s.carrier)) fail(Errc::hypothesis_not_met, "N is not closed under multiplication");
  for (Elem x : s.carrier) {
    if (!s.carrier.contains(s.map[x])) fail(Errc::invalid_input, "map leaves N");
    if (!m.leq(x, s.map[x]) || s.map[s.map[x]] != s.map[x]) fail(Errc::invalid_input, "map is not a closure on N");
    for (Elem y : s.carrier) {
      if (m.leq(x, y) && !m.leq(s.map[x], s.map[y])) fail(Errc::invalid_input, "map is not a closure on N");
      if (!m.leq(m.mul(s.map[x], s.map[y]), s.map[m.mul(x, y)])) fail(Errc::invalid_input, "map is not a nucleus on N");
    }
  }
}

NucleusMap finish_induced(const FinOrderedMagma& m, const SubNucleus& s, SelfMap f) {
  for (Elem x : s.carrier)
    if (f[x] != s.map[x]) fail(Errc::restriction_mismatch, "induced map differs from the given one at " + m.label(x));
  auto r = NucleusMap::try_make(m, std::move(f));
  if (!r || !r->is_nucleus()) fail(Errc::restriction_mismatch, "induced map is not a nucleus");
  return *r;
}

}  // namespace

NucleusMap induce_lower(const FinOrderedMagma& m, const SubNucleus& s) {
  check_sub_nucleus(m, s);
  if (!is_sup_spanning(m, s.carrier)) fail(Errc::hypothesis_not_met, "N is not sup-spanning");
  if (!classify(m).np) fail(Errc::hypothesis_not_met, m.name() + " is not a near prequantale");
  const auto& p = m.poset();
  ElemSet good;  // y with z <= y implying z⋆ <= y for z in N
  for (Elem y = 0; y < m.size(); ++y) {
    bool ok = true;
    for (Elem z : s.carrier & p.down(y)) ok = ok && p.leq(s.map[z], y);
    if (ok) good.insert(y);
  }
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    auto inf = p.inf(good & p.up(x));
    if (!inf) fail(Errc::hypothesis_not_met, "no infimum defining the image of " + m.label(x));
    f[x] = *inf;
  }
  return finish_induced(m, s, std::move(f));
}

NucleusMap induce_upper(const FinOrderedMagma& m, const SubNucleus& s) {
  check_sub_nucleus(m, s);
  if (!is_saturated(m, s.carrier)) fail(Errc::hypothesis_not_met, "N is not saturated");
  if (!m.poset().is_down_closed(s.carrier)) fail(Errc::hypothesis_not_met, "N is not downward closed");
  auto top = m.top();
  if (!top) fail(Errc::hypothesis_not_met, m.name() + " is not bounded above");
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) f[x] = s.carrier.contains(x) ? s.map[x] : *top;
  return finish_induced(m, s, std::move(f));
}

FinOrderedMagma quotient(const FinOrderedMagma& m, const NucleusMap& star) {
  if (star.size() != m.size() || !star.is_nucleus()) fail(Errc::invalid_input, "quotient needs a nucleus");
  auto elems = star.fixed().elements();
  std::vector<Elem> index(m.size(), 0);
  std::vector<std::string> labels;
  for (Elem i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
    labels.push_back(m.label(elems[i]));
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < elems.size(); ++i)
    for (Elem j = 0; j < elems.size(); ++j)
      if (i != j && m.leq(elems[i], elems[j])) pairs.emplace_back(i, j);
  std::vector<Elem> table;
  for (Elem a : elems)
    for (Elem b : elems) table.push_back(index[star(m.mul(a, b))]);
  return FinOrderedMagma(m.name() + "/star", FinPoset::from_pairs(labels, pairs), std::move(table));
}

SystemReport system_predicates(const FinOrderedMagma& p, const SelfMap& r) {
  const auto& info = p.powerset_info();
  if (!info || !info->zero || info->nonempty_only)
    fail(Errc::not_a_powerset_structure, p.name() + " was not built as a power set with adjoined zero");
  if (r.size() != p.size()) fail(Errc::invalid_input, "map has wrong length");
  const std::size_t k = info->base_labels.size();
  auto element = [&](ElemSet s) {
    for (Elem i = 0; i < info->subsets.size(); ++i)
      if (info->subsets[i] == s) return i;
    fail(Errc::not_a_powerset_structure, "subset missing from power set structure");
  };
  const Elem empty = element(ElemSet{});
  const Elem zero = element(ElemSet::single(*info->zero));
  const Elem whole = element(ElemSet::full(k));
  std::optional<Elem> one;
  for (Elem e = 0; e < k && !one; ++e) {
    bool ok = true;
    for (Elem x = 0; x < k && ok; ++x) ok = info->base_mul[e * k + x] == x && info->base_mul[x * k + e] == x;
    if (ok) one = element(ElemSet::single(e));
  }

  SystemReport rep;
  MapChecker chk(p, false);
  const bool closure = chk.is_closure(r);
  rep.is_nucleus = chk.is_nucleus(r);
  rep.is_module_system = rep.is_nucleus && r[empty] == zero;
  rep.is_weak_ideal_system = rep.is_nucleus && r[zero] == r[empty] && one && r[*one] == whole;
  ElemSet singles;
  for (Elem c = 0; c < k; ++c) singles.insert(element(ElemSet::single(c)));
  rep.is_ideal_system = rep.is_weak_ideal_system && singles.subset_of(transportable(p, r));

  bool transports = true, lax = true, absorbs = true;
  for (Elem c : singles) {
    if (!p.leq(p.mul(c, whole), r[c])) absorbs = false;
    for (Elem x = 0; x < p.size(); ++x) {
      if (r[p.mul(c, x)] != p.mul(c, r[x])) transports = false;
      if (!p.leq(p.mul(c, r[x]), r[p.mul(c, x)])) lax = false;
    }
  }
  rep.module_by_definition = closure && r[empty] == zero && transports;
  rep.weak_ideal_by_definition = closure && p.leq(zero, r[empty]) && absorbs && lax;
  rep.ideal_by_definition = rep.weak_ideal_by_definition && transports;
  return rep;
}

}  // namespace qlab
