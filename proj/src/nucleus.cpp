#include "qlab/nucleus.hpp"

#include <algorithm>

#include "qlab/error.hpp"
#include "qlab/limits.hpp"

namespace qlab {

std::string_view kind_name(MapKind k) {
  switch (k) {
    case MapKind::closure: return "closure";
    case MapKind::nucleus: return "nucleus";
    case MapKind::strict_nucleus: return "strict-nucleus";
  }
  return "closure";
}

std::string_view holds_name(Holds h) {
  switch (h) {
    case Holds::no: return "false";
    case Holds::yes: return "true";
    case Holds::not_applicable: return "n/a";
  }
  return "n/a";
}

std::optional<NucleusMap> NucleusMap::try_make(const FinOrderedMagma& m, SelfMap map) {
  if (map.size() != m.size()) return std::nullopt;
  for (Elem v : map)
    if (v >= m.size()) return std::nullopt;
  MapChecker chk(m, false);
  if (!chk.is_closure(map)) return std::nullopt;
  NucleusMap r;
  r.fixed_ = fixed_points(map);
  if (chk.is_nucleus(map)) {
    bool strict = true;
    for (Elem x = 0; x < m.size() && strict; ++x)
      for (Elem y = 0; y < m.size() && strict; ++y) strict = m.mul(map[x], map[y]) == map[m.mul(x, y)];
    r.kind_ = strict ? MapKind::strict_nucleus : MapKind::nucleus;
  }
  r.map_ = std::move(map);
  return r;
}

NucleusMap NucleusMap::make(const FinOrderedMagma& m, SelfMap map) {
  if (auto r = try_make(m, std::move(map))) return *r;
  fail(Errc::invalid_input, "map is not a closure operation on " + m.name());
}

NucleusMap identity_nucleus(const FinOrderedMagma& m) { return NucleusMap::make(m, identity_map(m.size())); }

NucleusMap top_nucleus(const FinOrderedMagma& m) {
  auto t = m.top();
  if (!t) fail(Errc::hypothesis_not_met, m.name() + " has no largest element");
  return NucleusMap::make(m, SelfMap(m.size(), *t));
}

bool pointwise_leq(const FinOrderedMagma& m, const SelfMap& a, const SelfMap& b) {
  for (Elem x = 0; x < m.size(); ++x)
    if (!m.leq(a[x], b[x])) return false;
  return true;
}

MapChecker::MapChecker(const FinOrderedMagma& m, bool battery) : m_(m), n_(m.size()), battery_(battery) {
  if (!battery) return;
  const auto n = static_cast<Elem>(n_);
  for (Elem e = 0; e < n && !left_unital_; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = m.mul(e, x) == x;
    left_unital_ = ok;
  }
  for (Elem e = 0; e < n && !right_unital_; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = m.mul(x, e) == x;
    right_unital_ = ok;
  }
  near_residuated_ = is_near_residuated(m);
  rdiv_.assign(n_ * n_, -1);
  ldiv_.assign(n_ * n_, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (auto r = residual(m, x, y, Side::left)) rdiv_[x * n_ + y] = static_cast<int>(*r);
      if (auto r = residual(m, x, y, Side::right)) ldiv_[x * n_ + y] = static_cast<int>(*r);
    }
}

std::optional<Elem> MapChecker::res(Side s, Elem x, Elem y) const {
  int v = (s == Side::left ? rdiv_ : ldiv_)[x * n_ + y];
  if (v < 0) return std::nullopt;
  return static_cast<Elem>(v);
}

bool MapChecker::expansive(const SelfMap& f) const {
  for (Elem x = 0; x < n_; ++x)
    if (!m_.leq(x, f[x])) return false;
  return true;
}

bool MapChecker::monotone(const SelfMap& f) const {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (m_.leq(x, y) && !m_.leq(f[x], f[y])) return false;
  return true;
}

bool MapChecker::lax(const SelfMap& f) const {
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (!m_.leq(m_.mul(f[x], f[y]), f[m_.mul(x, y)])) return false;
  return true;
}

bool MapChecker::is_closure(const SelfMap& f) const {
  for (Elem x = 0; x < n_; ++x)
    if (f[f[x]] != f[x]) return false;
  return expansive(f) && monotone(f);
}

bool MapChecker::is_nucleus(const SelfMap& f) const { return is_closure(f) && lax(f); }

MapReport MapChecker::check(const SelfMap& f) const {
  if (!battery_) fail(Errc::invalid_input, "checker built without battery tables");
  if (f.size() != n_) fail(Errc::invalid_input, "map has wrong length");
  for (Elem v : f)
    if (v >= n_) fail(Errc::invalid_input, "map value out of range");
  const auto n = static_cast<Elem>(n_);
  const auto& m = m_;
  MapReport r;
  r.expansive = expansive(f);
  r.monotone = monotone(f);
  r.idempotent = true;
  for (Elem x = 0; x < n; ++x) r.idempotent = r.idempotent && f[f[x]] == f[x];
  r.is_preclosure = r.expansive && r.monotone;
  r.is_closure = r.is_preclosure && r.idempotent;
  const bool lax_ok = lax(f);
  r.is_nucleus = r.is_closure && lax_ok;
  r.is_strict_nucleus = r.is_nucleus;
  for (Elem x = 0; x < n && r.is_strict_nucleus; ++x)
    for (Elem y = 0; y < n && r.is_strict_nucleus; ++y) r.is_strict_nucleus = m.mul(f[x], f[y]) == f[m.mul(x, y)];

  auto& b = r.battery;
  b.closure_nucleus = holds(r.is_nucleus);
  bool one_sided = true, star_product = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Elem xy = f[m.mul(x, y)];
      if (!m.leq(m.mul(x, f[y]), xy) || !m.leq(m.mul(f[x], y), xy)) one_sided = false;
      if (f[m.mul(f[x], f[y])] != xy) star_product = false;
    }
  b.closure_one_sided = holds(one_sided);
  b.closure_star_product = holds(star_product);
  if (m.is_monoid()) {
    bool assoc = true;
    for (Elem x = 0; x < n && assoc; ++x)
      for (Elem y = 0; y < n && assoc; ++y)
        for (Elem z = 0; z < n && assoc; ++z)
          assoc = f[m.mul(f[m.mul(x, y)], z)] == f[m.mul(x, f[m.mul(y, z)])];
    b.closure_star_assoc = holds(assoc);
  }

  b.map_nucleus = holds(r.is_nucleus);
  if (left_unital_ || right_unital_) {
    bool adjoint = true, exp_product = r.expansive;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          Elem zs = f[z];
          bool a1 = m.leq(m.mul(x, y), zs);
          bool a2 = m.leq(m.mul(x, f[y]), zs);
          bool a3 = m.leq(m.mul(f[x], y), zs);
          if (a1 != a2 || a1 != a3) adjoint = false;
          if (a1 && !m.leq(m.mul(f[x], f[y]), zs)) exp_product = false;
        }
    b.map_adjoint = holds(adjoint);
    b.map_expansive_product = holds(exp_product);
    if (near_residuated_) {
      bool left = true, right = true;
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          auto l1 = res(Side::left, f[x], y), l2 = res(Side::left, f[x], f[y]);
          if ((l1 || l2) && l1 != l2) left = false;
          auto r1 = res(Side::right, f[x], y), r2 = res(Side::right, f[x], f[y]);
          if ((r1 || r2) && r1 != r2) right = false;
        }
      b.map_residual_left = holds(left);
      b.map_residual_right = holds(right);
    }
  }
  return r;
}

MapReport check_map(const FinOrderedMagma& m, const SelfMap& map) { return MapChecker(m).check(map); }

std::optional<NucleusMap> closure_from_fixed(const FinOrderedMagma& m, ElemSet c) {
  const auto& p = m.poset();
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    auto least = p.least_of(c & p.up(x));
    if (!least) return std::nullopt;
    f[x] = *least;
  }
  return NucleusMap::make(m, std::move(f));
}

std::optional<bool> residual_criterion(const FinOrderedMagma& m, ElemSet c) {
  if (!is_near_residuated(m)) return std::nullopt;
  for (Elem x : c)
    for (Elem y = 0; y < m.size(); ++y) {
      auto l = residual(m, x, y, Side::left);
      auto r = residual(m, x, y, Side::right);
      if ((l && !c.contains(*l)) || (r && !c.contains(*r))) return false;
    }
  return true;
}

NucleusMap closure_of_preclosure(const FinOrderedMagma& m, const SelfMap& pre) {
  MapChecker chk(m);
  if (!chk.check(pre).is_preclosure) fail(Errc::hypothesis_not_met, "map is not expansive and order-preserving");
  const auto& p = m.poset();
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    ElemSet orbit{pre[x]};
    Elem cur = x;
    std::size_t steps = 0;
    for (;;) {
      auto next = p.sup(orbit);
      if (!next) fail(Errc::no_fixpoint, "orbit of " + m.label(x) + " has no supremum");
      if (*next == cur) break;
      cur = *next;
      orbit.insert(pre[cur]);
      if (++steps > m.size()) fail(Errc::no_fixpoint, "iteration from " + m.label(x) + " did not stabilize");
    }
    f[x] = cur;
  }
  return NucleusMap::make(m, std::move(f));
}

bool preclosure_nucleus_hypotheses(const FinOrderedMagma& m, const SelfMap& pre) {
  const auto& p = m.poset();
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (!p.join(x, y) && !(p.up(x) & p.up(y)).empty()) return false;
  if (!is_near_residuated(m)) return false;
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) {
      Elem xy = pre[m.mul(x, y)];
      if (!m.leq(m.mul(x, pre[y]), xy) || !m.leq(m.mul(pre[x], y), xy)) return false;
    }
  return true;
}

void canonical_sort(std::vector<NucleusMap>& v) {
  std::sort(v.begin(), v.end(), [](const NucleusMap& a, const NucleusMap& b) {
    if (a.fixed().size() != b.fixed().size()) return a.fixed().size() > b.fixed().size();
    return a.fixed() < b.fixed();
  });
}

namespace {

std::vector<NucleusMap> enumerate(const FinOrderedMagma& m, bool nuclei_only, bool prune) {
  const auto& p = m.poset();
  if (m.size() > limits().closure_enumeration)
    fail(Errc::size_limit_exceeded, "closure enumeration needs at most " +
                                        std::to_string(limits().closure_enumeration) + " elements, got " +
                                        std::to_string(m.size()));
  auto order = p.linear_extension();
  std::reverse(order.begin(), order.end());  // tops first

  // Residuals x/y and y\x of each x; a fixed set of a nucleus must contain them.
  const bool use_residuals = nuclei_only && prune && is_near_residuated(m);
  std::vector<ElemSet> residuals(m.size());
  if (use_residuals)
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem y = 0; y < m.size(); ++y) {
        if (auto r = residual(m, x, y, Side::left)) residuals[x].insert(*r);
        if (auto r = residual(m, x, y, Side::right)) residuals[x].insert(*r);
      }

  std::vector<NucleusMap> out;
  ElemSet decided;
  auto dfs = [&](auto&& self, std::size_t i, ElemSet c, ElemSet forced) -> void {
    if (i == order.size()) {
      auto cl = closure_from_fixed(m, c);
      if (!cl) fail(Errc::invalid_input, "enumeration produced a set without closure");
      if (!nuclei_only || cl->is_nucleus()) out.push_back(std::move(*cl));
      return;
    }
    const Elem x = order[i];
    const ElemSet above = c & p.up(x);
    const bool must = forced.contains(x) || !p.least_of(above).has_value();
    const ElemSet done = decided;
    decided.insert(x);
    // include x
    if (!use_residuals || (residuals[x] & done).subset_of(c))
      self(self, i + 1, c | ElemSet::single(x), forced | residuals[x]);
    if (!must) self(self, i + 1, c, forced);
    decided = done;
  };
  dfs(dfs, 0, ElemSet{}, ElemSet{});
  canonical_sort(out);
  return out;
}

}  // namespace

std::vector<NucleusMap> enumerate_closures(const FinOrderedMagma& m) { return enumerate(m, false, false); }

std::vector<NucleusMap> enumerate_nuclei(const FinOrderedMagma& m, bool prune) { return enumerate(m, true, prune); }

}  // namespace qlab
