#include "support.hpp"

#include <algorithm>
#include <numeric>

#include "qlab/fixtures.hpp"

namespace qlab::testing {

FinPoset random_poset(Rng& rng, std::size_t n, double density) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return FinPoset::from_pairs(labels, pairs);
}

namespace {

struct TableSearch {
  const FinPoset& p;
  std::size_t n;
  bool commutative;
  Rng& rng;
  std::vector<int> t;
  std::vector<std::pair<Elem, Elem>> cells;
  long budget = 4000;

  int at(Elem a, Elem b) const { return t[a * n + b]; }

  bool consistent(Elem a, Elem b) const {
    const int v = at(a, b);
    for (Elem a2 = 0; a2 < n; ++a2) {
      const int w = at(a2, b);
      if (w < 0) continue;
      if (p.leq(a, a2) && !p.leq(v, w)) return false;
      if (p.leq(a2, a) && !p.leq(w, v)) return false;
    }
    for (Elem b2 = 0; b2 < n; ++b2) {
      const int w = at(a, b2);
      if (w < 0) continue;
      if (p.leq(b, b2) && !p.leq(v, w)) return false;
      if (p.leq(b2, b) && !p.leq(w, v)) return false;
    }
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        const int xy = at(x, y);
        if (xy < 0) continue;
        for (Elem z = 0; z < n; ++z) {
          const int yz = at(y, z);
          if (yz < 0) continue;
          const int l = at(xy, z), r = at(x, yz);
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  bool fill(std::size_t k) {
    if (k == cells.size()) return true;
    if (--budget < 0) return false;
    auto [a, b] = cells[k];
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 0);
    std::shuffle(values.begin(), values.end(), rng);
    if (commutative && b < a) values = {at(b, a)};
    for (int v : values) {
      t[a * n + b] = v;
      if (consistent(a, b) && fill(k + 1)) return true;
    }
    t[a * n + b] = -1;
    return false;
  }
};

std::string set_label(const MagmaTable& base, std::uint32_t mask) {
  std::string s = "{";
  for (std::size_t i = 0; i < base.size(); ++i)
    if ((mask >> i) & 1u) s += (s.size() > 1 ? "," : "") + base.labels[i];
  return s + "}";
}

std::uint32_t complex_product(const MagmaTable& base, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0;
  for (Elem x = 0; x < base.size(); ++x)
    if ((a >> x) & 1u)
      for (Elem y = 0; y < base.size(); ++y)
        if ((b >> y) & 1u) out |= 1u << base.at(x, y);
  return out;
}

}  // namespace

FinOrderedMagma random_ordered_monoid(Rng& rng, std::size_t max_size, bool commutative) {
  std::uniform_int_distribution<std::size_t> size_of(1, max_size);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (;;) {
    const std::size_t n = size_of(rng);
    FinPoset p = random_poset(rng, n, density(rng));
    const Elem e = std::uniform_int_distribution<Elem>(0, static_cast<Elem>(n - 1))(rng);
    TableSearch s{p, n, commutative, rng, std::vector<int>(n * n, -1), {}};
    for (Elem x = 0; x < n; ++x) {
      s.t[e * n + x] = static_cast<int>(x);
      s.t[x * n + e] = static_cast<int>(x);
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (a != e && b != e) s.cells.emplace_back(a, b);
    if (!s.fill(0)) continue;
    std::vector<Elem> table(s.t.begin(), s.t.end());
    return FinOrderedMagma("MON" + std::to_string(n), std::move(p), std::move(table));
  }
}

MagmaTable random_magma(Rng& rng, std::size_t n) {
  MagmaTable t;
  t.name = "R";
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back(std::string(1, static_cast<char>('a' + i)));
  std::uniform_int_distribution<Elem> v(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < n * n; ++i) t.mul.push_back(v(rng));
  return t;
}

SetFamily close_family(const MagmaTable& base, std::vector<std::uint32_t> seeds, bool with_empty) {
  std::vector<char> in(std::size_t{1} << base.size(), 0);
  for (auto s : seeds) in[s] = 1;
  if (with_empty) in[0] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t a = 0; a < in.size(); ++a)
      for (std::uint32_t b = 0; a < in.size() && in[a] && b < in.size(); ++b) {
        if (!in[b]) continue;
        for (std::uint32_t c : {a | b, complex_product(base, a, b)})
          if (!in[c]) in[c] = 1, grew = true;
      }
  }
  SetFamily f{base, {}};
  for (std::uint32_t s = 0; s < in.size(); ++s)
    if (in[s]) f.sets.push_back(s);
  return f;
}

FinOrderedMagma family_structure(const SetFamily& f, const std::string& name) {
  std::vector<std::string> labels;
  for (auto s : f.sets) labels.push_back(set_label(f.base, s));
  const auto k = static_cast<Elem>(f.sets.size());
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j)
      if (i != j && (f.sets[i] & ~f.sets[j]) == 0) pairs.emplace_back(i, j);
  auto index = [&](std::uint32_t s) {
    return static_cast<Elem>(std::lower_bound(f.sets.begin(), f.sets.end(), s) - f.sets.begin());
  };
  std::vector<Elem> table;
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) table.push_back(index(complex_product(f.base, f.sets[i], f.sets[j])));
  return FinOrderedMagma(name, FinPoset::from_pairs(labels, pairs), std::move(table));
}

SelfMap family_inclusion(const SetFamily& inner, const SetFamily& outer) {
  SelfMap m;
  for (auto s : inner.sets)
    m.push_back(static_cast<Elem>(std::lower_bound(outer.sets.begin(), outer.sets.end(), s) - outer.sets.begin()));
  return m;
}

SetFamily random_family(Rng& rng, std::size_t max_size, std::size_t base_size) {
  const std::uint32_t top = (1u << base_size) - 1;
  std::uniform_int_distribution<std::uint32_t> mask(1, top);
  std::uniform_int_distribution<int> count(1, 3);
  std::bernoulli_distribution empty(0.3);
  for (;;) {
    auto base = random_magma(rng, base_size);
    std::vector<std::uint32_t> seeds;
    for (int i = count(rng); i > 0; --i) seeds.push_back(mask(rng));
    auto f = close_family(base, seeds, empty(rng));
    if (f.sets.size() <= max_size) return f;
  }
}

void for_each_map(std::size_t n, const std::function<void(const SelfMap&)>& f) {
  SelfMap m(n, 0);
  for (;;) {
    f(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == n) m[i++] = 0;
    if (i == n) return;
  }
}

bool oracle_is_closure(const FinOrderedMagma& m, const SelfMap& f) {
  const auto n = m.size();
  for (Elem x = 0; x < n; ++x) {
    if (!m.leq(x, f[x]) || f[f[x]] != f[x]) return false;
    for (Elem y = 0; y < n; ++y)
      if (m.leq(x, y) && !m.leq(f[x], f[y])) return false;
  }
  return true;
}

bool oracle_is_nucleus(const FinOrderedMagma& m, const SelfMap& f) {
  if (!oracle_is_closure(m, f)) return false;
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (!m.leq(m.mul(f[x], f[y]), f[m.mul(x, y)])) return false;
  return true;
}

std::vector<SelfMap> oracle_closures(const FinOrderedMagma& m) {
  std::vector<SelfMap> out;
  for_each_map(m.size(), [&](const SelfMap& f) {
    if (oracle_is_closure(m, f)) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SelfMap> oracle_nuclei(const FinOrderedMagma& m) {
  std::vector<SelfMap> out;
  for_each_map(m.size(), [&](const SelfMap& f) {
    if (oracle_is_nucleus(m, f)) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool oracle_leq(const FinOrderedMagma& m, const SelfMap& a, const SelfMap& b) {
  for (Elem x = 0; x < m.size(); ++x)
    if (!m.leq(a[x], b[x])) return false;
  return true;
}

std::optional<SelfMap> oracle_max(const FinOrderedMagma& m, const std::vector<SelfMap>& v) {
  for (const auto& a : v)
    if (std::all_of(v.begin(), v.end(), [&](const SelfMap& b) { return oracle_leq(m, b, a); })) return a;
  return std::nullopt;
}

std::optional<SelfMap> oracle_glb(const FinOrderedMagma& m, const std::vector<SelfMap>& v, const SelfMap& a,
                                  const SelfMap& b) {
  std::vector<SelfMap> lower;
  for (const auto& c : v)
    if (oracle_leq(m, c, a) && oracle_leq(m, c, b)) lower.push_back(c);
  return oracle_max(m, lower);
}

std::optional<SelfMap> oracle_lub(const FinOrderedMagma& m, const std::vector<SelfMap>& v, const SelfMap& a,
                                  const SelfMap& b) {
  for (const auto& c : v) {
    if (!oracle_leq(m, a, c) || !oracle_leq(m, b, c)) continue;
    bool least = true;
    for (const auto& d : v)
      if (oracle_leq(m, a, d) && oracle_leq(m, b, d) && !oracle_leq(m, c, d)) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

std::optional<Elem> oracle_rdiv(const FinOrderedMagma& m, Elem x, Elem y) {
  std::optional<Elem> best;
  for (Elem z = 0; z < m.size(); ++z) {
    if (!m.leq(m.mul(z, y), x)) continue;
    if (!best || m.leq(*best, z)) best = z;
  }
  if (best)
    for (Elem z = 0; z < m.size(); ++z)
      if (m.leq(m.mul(z, y), x) && !m.leq(z, *best)) return std::nullopt;
  return best;
}

std::optional<Elem> oracle_ldiv(const FinOrderedMagma& m, Elem y, Elem x) {
  std::optional<Elem> best;
  for (Elem z = 0; z < m.size(); ++z) {
    if (!m.leq(m.mul(y, z), x)) continue;
    if (!best || m.leq(*best, z)) best = z;
  }
  if (best)
    for (Elem z = 0; z < m.size(); ++z)
      if (m.leq(m.mul(y, z), x) && !m.leq(z, *best)) return std::nullopt;
  return best;
}

bool oracle_is_stable(const FinOrderedMagma& m, const SelfMap& f) {
  const auto& p = m.poset();
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) {
      auto xy = p.meet(x, y);
      if (!xy) continue;
      if (p.meet(f[x], f[y]) != std::optional<Elem>(f[*xy])) return false;
    }
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem t = 0; t < m.size(); ++t) {
      if (auto r = oracle_rdiv(m, x, t); r && oracle_rdiv(m, f[x], t) != std::optional<Elem>(f[*r])) return false;
      if (auto l = oracle_ldiv(m, t, x); l && oracle_ldiv(m, t, f[x]) != std::optional<Elem>(f[*l])) return false;
    }
  return true;
}

std::uint64_t oracle_moore_count(int n) {
  const std::uint32_t sets = 1u << n, full = sets - 1;
  std::uint64_t count = 0;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << sets); ++fam) {
    if (!((fam >> full) & 1u)) continue;
    bool closed = true;
    for (std::uint32_t a = 0; a < sets && closed; ++a)
      for (std::uint32_t b = 0; b < sets && closed; ++b)
        if (((fam >> a) & 1u) && ((fam >> b) & 1u) && !((fam >> (a & b)) & 1u)) closed = false;
    count += closed;
  }
  return count;
}

std::vector<FinOrderedMagma> small_fixtures(std::size_t max_size) {
  auto v = fixtures::all();
  StructureSpec c5;
  c5.name = "CHAIN5MIN";
  c5.elements = {"0", "a", "b", "c", "1"};
  for (std::size_t i = 0; i + 1 < c5.elements.size(); ++i) c5.leq.emplace_back(c5.elements[i], c5.elements[i + 1]);
  for (std::size_t i = 0; i < 5; ++i) {
    c5.mul.emplace_back();
    for (std::size_t j = 0; j < 5; ++j) c5.mul.back().push_back(c5.elements[std::min(i, j)]);
  }
  v.push_back(validate_structure(c5));
  v.push_back(powerset_structure(cyclic_group(2), false, true));
  v.push_back(powerset_structure(cyclic_group(3), false, true));
  std::erase_if(v, [&](const FinOrderedMagma& m) { return m.size() > max_size; });
  return v;
}

}  // namespace qlab::testing
