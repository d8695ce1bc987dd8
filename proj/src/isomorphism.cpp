#include "qlab/isomorphism.hpp"

#include <algorithm>
#include <array>

namespace qlab {

namespace {

using Signature = std::array<std::size_t, 6>;

std::vector<Signature> signatures(const FinOrderedMagma& m) {
  const auto n = static_cast<Elem>(m.size());
  std::vector<Signature> sig(n, Signature{});
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (m.leq(y, x)) ++sig[x][0];
      if (m.leq(x, y)) ++sig[x][1];
      if (m.mul(x, y) == x) ++sig[x][2];
      if (m.mul(y, x) == x) ++sig[x][3];
      if (m.mul(y, y) == x) ++sig[x][4];
    }
    sig[x][5] = m.mul(x, x) == x;
  }
  return sig;
}

struct Search {
  const FinOrderedMagma& a;
  const FinOrderedMagma& b;
  std::vector<Signature> sa, sb;
  SelfMap f;
  std::vector<char> used;
  std::vector<char> assigned;

  bool consistent(Elem x) const {
    for (Elem y = 0; y < a.size(); ++y) {
      if (!assigned[y]) continue;
      if (a.leq(x, y) != b.leq(f[x], f[y]) || a.leq(y, x) != b.leq(f[y], f[x])) return false;
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}, std::pair{x, x}}) {
        Elem r = a.mul(p, q);
        if (assigned[r] && f[r] != b.mul(f[p], f[q])) return false;
      }
    }
    // products landing on x from assigned factors
    for (Elem p = 0; p < a.size(); ++p)
      for (Elem q = 0; q < a.size(); ++q)
        if (assigned[p] && assigned[q] && a.mul(p, q) == x && f[x] != b.mul(f[p], f[q])) return false;
    return true;
  }

  bool run(Elem x) {
    if (x == a.size()) return true;
    for (Elem y = 0; y < b.size(); ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      f[x] = y;
      assigned[x] = 1;
      used[y] = 1;
      if (consistent(x) && run(x + 1)) return true;
      assigned[x] = 0;
      used[y] = 0;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const FinOrderedMagma& a, const FinOrderedMagma& b, const SelfMap& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<char> hit(b.size(), 0);
  for (Elem v : f) {
    if (v >= b.size() || hit[v]) return false;
    hit[v] = 1;
  }
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  return true;
}

std::optional<SelfMap> find_isomorphism(const FinOrderedMagma& a, const FinOrderedMagma& b) {
  if (a.size() != b.size()) return std::nullopt;
  Search s{a, b, signatures(a), signatures(b), SelfMap(a.size(), 0), std::vector<char>(b.size(), 0),
           std::vector<char>(a.size(), 0)};
  auto sa = s.sa, sb = s.sb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  if (!s.run(0)) return std::nullopt;
  return s.f;
}

}  // namespace qlab
