#include "qlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qlab/error.hpp"

namespace qlab {

FinPoset FinPoset::from_pairs(std::vector<std::string> labels, const std::vector<std::pair<Elem, Elem>>& pairs) {
  if (labels.empty()) fail(Errc::invalid_input, "structure has no elements");
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) fail(Errc::invalid_input, "duplicate label '" + l + "'");

  FinPoset p;
  p.labels_ = std::move(labels);
  const std::size_t n = p.size();
  p.rel_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) p.rel_[i * n + i] = 1;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) fail(Errc::invalid_input, "order pair index out of range");
    p.rel_[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.rel_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (p.rel_[k * n + j]) p.rel_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.rel_[i * n + j] && p.rel_[j * n + i])
        fail(Errc::cycle_in_order, "order has a cycle through '" + p.labels_[i] + "' and '" + p.labels_[j] + "'");
  p.finish();
  return p;
}

FinPoset FinPoset::chain(std::vector<std::string> labels) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i + 1 < labels.size(); ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(std::move(labels), pairs);
}

FinPoset FinPoset::antichain(std::vector<std::string> labels) { return from_pairs(std::move(labels), {}); }

void FinPoset::finish() {
  const auto n = static_cast<Elem>(size());
  if (masked()) {
    up_.assign(n, 0);
    down_.assign(n, 0);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (leq(a, b)) {
          up_[a] |= ElemSet::Mask{1} << b;
          down_[b] |= ElemSet::Mask{1} << a;
        }
  }
  least_ = sup(std::span<const Elem>{});
  greatest_ = inf(std::span<const Elem>{});
}

std::optional<Elem> FinPoset::find(std::string_view label) const {
  for (Elem i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Elem FinPoset::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  fail(Errc::unknown_label, "unknown label '" + std::string(label) + "'");
}

void FinPoset::require_masked() const {
  if (!masked()) fail(Errc::size_limit_exceeded, "subset encoding needs at most 64 elements, got " + std::to_string(size()));
}

ElemSet FinPoset::upper_bounds(ElemSet x) const {
  ElemSet r = all();
  for (Elem e : x) r &= up(e);
  return r;
}

ElemSet FinPoset::lower_bounds(ElemSet x) const {
  ElemSet r = all();
  for (Elem e : x) r &= down(e);
  return r;
}

std::optional<Elem> FinPoset::least_of(ElemSet x) const {
  for (Elem e : x)
    if (x.subset_of(up(e))) return e;
  return std::nullopt;
}

std::optional<Elem> FinPoset::greatest_of(ElemSet x) const {
  for (Elem e : x)
    if (x.subset_of(down(e))) return e;
  return std::nullopt;
}

std::optional<Elem> FinPoset::sup(ElemSet x) const { return least_of(upper_bounds(x)); }
std::optional<Elem> FinPoset::inf(ElemSet x) const { return greatest_of(lower_bounds(x)); }

ElemSet FinPoset::minimal_of(ElemSet x) const {
  ElemSet r;
  for (Elem e : x)
    if ((down(e) & x) == ElemSet::single(e)) r.insert(e);
  return r;
}

ElemSet FinPoset::maximal_of(ElemSet x) const {
  ElemSet r;
  for (Elem e : x)
    if ((up(e) & x) == ElemSet::single(e)) r.insert(e);
  return r;
}

ElemSet FinPoset::down_closure(ElemSet x) const {
  ElemSet r;
  for (Elem e : x) r |= down(e);
  return r;
}

bool FinPoset::is_down_closed(ElemSet x) const { return down_closure(x) == x; }

bool FinPoset::is_directed(ElemSet x) const {
  if (x.empty()) return false;
  for (Elem a : x)
    for (Elem b : x)
      if ((up(a) & up(b) & x).empty()) return false;
  return true;
}

std::optional<Elem> FinPoset::sup(std::span<const Elem> xs) const {
  std::optional<Elem> best;
  for (Elem u = 0; u < size(); ++u) {
    if (!std::all_of(xs.begin(), xs.end(), [&](Elem x) { return leq(x, u); })) continue;
    if (!best || leq(u, *best)) best = u;
  }
  if (!best) return std::nullopt;
  for (Elem u = 0; u < size(); ++u)
    if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return leq(x, u); }) && !leq(*best, u)) return std::nullopt;
  return best;
}

std::optional<Elem> FinPoset::inf(std::span<const Elem> xs) const {
  std::optional<Elem> best;
  for (Elem l = 0; l < size(); ++l) {
    if (!std::all_of(xs.begin(), xs.end(), [&](Elem x) { return leq(l, x); })) continue;
    if (!best || leq(*best, l)) best = l;
  }
  if (!best) return std::nullopt;
  for (Elem l = 0; l < size(); ++l)
    if (std::all_of(xs.begin(), xs.end(), [&](Elem x) { return leq(l, x); }) && !leq(l, *best)) return std::nullopt;
  return best;
}

std::optional<Elem> FinPoset::join(Elem a, Elem b) const {
  const Elem xs[] = {a, b};
  return sup(std::span<const Elem>(xs));
}

std::optional<Elem> FinPoset::meet(Elem a, Elem b) const {
  const Elem xs[] = {a, b};
  return inf(std::span<const Elem>(xs));
}

std::vector<std::pair<Elem, Elem>> FinPoset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const auto n = static_cast<Elem>(size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c)
        if (lt(a, c) && lt(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::vector<Elem> FinPoset::linear_extension() const {
  const auto n = static_cast<Elem>(size());
  std::vector<std::size_t> below(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (leq(b, a)) ++below[a];
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return below[a] < below[b]; });
  return order;
}

}  // namespace qlab
