#include "qlab/magma_ops.hpp"

#include <numeric>
#include <set>

#include "qlab/error.hpp"
#include "qlab/limits.hpp"

namespace qlab {

SelfMap identity_map(std::size_t n) {
  SelfMap f(n);
  std::iota(f.begin(), f.end(), Elem{0});
  return f;
}

SelfMap compose(const SelfMap& f, const SelfMap& g) {
  SelfMap h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

ElemSet image_of(const SelfMap& f) {
  ElemSet r;
  for (Elem v : f) r.insert(v);
  return r;
}

ElemSet fixed_points(const SelfMap& f) {
  ElemSet r;
  for (Elem i = 0; i < f.size(); ++i)
    if (f[i] == i) r.insert(i);
  return r;
}

std::optional<Elem> residual(const FinOrderedMagma& m, Elem x, Elem y, Side side) {
  ElemSet cands;
  for (Elem z = 0; z < m.size(); ++z) {
    Elem p = side == Side::left ? m.mul(z, y) : m.mul(y, z);
    if (m.leq(p, x)) cands.insert(z);
  }
  return m.poset().greatest_of(cands);
}

namespace {

// 0: some residual set empty, 1: all nonempty sets have a maximum, -1: some lacks one.
int residual_shape(const FinOrderedMagma& m, bool& any_empty) {
  any_empty = false;
  const auto n = static_cast<Elem>(m.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Side s : {Side::left, Side::right}) {
        ElemSet cands;
        for (Elem z = 0; z < n; ++z)
          if (m.leq(s == Side::left ? m.mul(z, y) : m.mul(y, z), x)) cands.insert(z);
        if (cands.empty()) any_empty = true;
        else if (!m.poset().greatest_of(cands)) return -1;
      }
  return 1;
}

bool is_order_automorphism(const FinOrderedMagma& m, const SelfMap& f) {
  if (image_of(f).size() != m.size()) return false;
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b)
      if (m.leq(a, b) != m.leq(f[a], f[b])) return false;
  return true;
}

}  // namespace

bool is_residuated(const FinOrderedMagma& m) {
  bool empty = false;
  return residual_shape(m, empty) == 1 && !empty;
}

bool is_near_residuated(const FinOrderedMagma& m) {
  bool empty = false;
  return residual_shape(m, empty) == 1;
}

SelfMap left_translation(const FinOrderedMagma& m, Elem r) {
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) f[x] = m.mul(r, x);
  return f;
}

SelfMap right_translation(const FinOrderedMagma& m, Elem s) {
  SelfMap f(m.size());
  for (Elem x = 0; x < m.size(); ++x) f[x] = m.mul(x, s);
  return f;
}

UnitsReport units_and_inverses(const FinOrderedMagma& m) {
  UnitsReport r;
  const auto n = static_cast<Elem>(m.size());
  for (Elem u = 0; u < n; ++u) {
    auto lu = left_translation(m, u), ru = right_translation(m, u);
    if (is_order_automorphism(m, lu) && is_order_automorphism(m, ru)) r.units.insert(u);
    for (Elem w = 0; w < n; ++w) {
      auto lw = left_translation(m, w), rw = right_translation(m, w);
      auto id = identity_map(n);
      if (compose(lw, lu) == id && compose(lu, lw) == id && compose(rw, ru) == id && compose(ru, rw) == id) {
        r.invertibles.insert(u);
        break;
      }
    }
  }
  return r;
}

std::vector<SelfMap> lin_maps(const FinOrderedMagma& m) {
  const auto n = static_cast<Elem>(m.size());
  std::vector<SelfMap> gens;
  for (Elem r = 0; r < n; ++r) {
    gens.push_back(left_translation(m, r));
    gens.push_back(right_translation(m, r));
  }
  std::set<SelfMap> seen{identity_map(n)};
  std::vector<SelfMap> out{identity_map(n)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      auto h = compose(g, out[i]);
      if (seen.insert(h).second) {
        out.push_back(std::move(h));
        if (out.size() > limits().lin_maps)
          fail(Errc::size_limit_exceeded, "translation monoid exceeds " + std::to_string(limits().lin_maps) + " maps");
      }
    }
  }
  return out;
}

bool is_cyclic(const FinOrderedMagma& m, Elem a) {
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (m.leq(m.mul(x, y), a) && !m.leq(m.mul(y, x), a)) return false;
  return true;
}

bool is_sup_spanning(const FinOrderedMagma& m, ElemSet sigma) {
  const auto& p = m.poset();
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) {
      ElemSet lefts, rights;
      for (Elem a : sigma & p.down(x)) lefts.insert(m.mul(a, y));
      for (Elem b : sigma & p.down(y)) rights.insert(m.mul(x, b));
      if (p.sup(lefts) != m.mul(x, y) || p.sup(rights) != m.mul(x, y)) return false;
    }
  return true;
}

ElemSet transportable(const FinOrderedMagma& m, const SelfMap& star) {
  ElemSet r;
  for (Elem a = 0; a < m.size(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < m.size() && ok; ++x)
      ok = star[m.mul(a, x)] == m.mul(a, star[x]) && star[m.mul(x, a)] == m.mul(star[x], a);
    if (ok) r.insert(a);
  }
  return r;
}

bool is_saturated(const FinOrderedMagma& m, ElemSet x) {
  auto zero = m.annihilator();
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b) {
      if (a == zero || b == zero) continue;
      if (x.contains(m.mul(a, b)) && !(x.contains(a) && x.contains(b))) return false;
    }
  return true;
}

}  // namespace qlab
