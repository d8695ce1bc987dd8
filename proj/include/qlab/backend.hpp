#pragma once

#include <concepts>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlab/magma.hpp"
#include "qlab/magma_ops.hpp"

namespace qlab {

// An ordered magma known through its operations, possibly with an infinite carrier.
template <class B>
concept StructureBackend = requires(const B& b, const typename B::Value& x, const typename B::Value& y) {
  typename B::Value;
  { b.leq(x, y) } -> std::convertible_to<bool>;
  { b.mul(x, y) } -> std::convertible_to<typename B::Value>;
  { b.rdiv(x, y) } -> std::convertible_to<std::optional<typename B::Value>>;
  { b.is_compact(x) } -> std::convertible_to<bool>;
  { b.top() } -> std::convertible_to<std::optional<typename B::Value>>;
  { b.show(x) } -> std::convertible_to<std::string>;
};

// Backends that can take suprema of an increasing chain given by its terms.
template <class B>
concept ChainSupBackend = StructureBackend<B> && requires(const B& b, std::function<typename B::Value(int)> chain) {
  { b.chain_sup(chain) } -> std::convertible_to<typename B::Value>;
};

class FiniteBackend {
 public:
  using Value = Elem;
  explicit FiniteBackend(const FinOrderedMagma& m) : m_(m) {}
  bool leq(Elem x, Elem y) const { return m_.leq(x, y); }
  Elem mul(Elem x, Elem y) const { return m_.mul(x, y); }
  std::optional<Elem> rdiv(Elem x, Elem y) const { return qlab::rdiv(m_, x, y); }
  bool is_compact(Elem) const { return true; }
  std::optional<Elem> top() const { return m_.top(); }
  std::string show(Elem x) const { return m_.label(x); }

 private:
  const FinOrderedMagma& m_;
};

struct ProbeFailure {
  std::string property;
  std::string detail;
};

template <StructureBackend B>
bool equal(const B& b, const typename B::Value& x, const typename B::Value& y) {
  return b.leq(x, y) && b.leq(y, x);
}

// Closure and nucleus axioms on every pair drawn from samples.
template <StructureBackend B, class F>
std::optional<ProbeFailure> probe_nucleus(const B& b, const F& star, std::span<const typename B::Value> samples) {
  for (const auto& x : samples) {
    const auto sx = star(x);
    if (!b.leq(x, sx)) return ProbeFailure{"expansive", b.show(x)};
    if (!equal(b, star(sx), sx)) return ProbeFailure{"idempotent", b.show(x)};
    for (const auto& y : samples) {
      const auto sy = star(y);
      if (b.leq(x, y) && !b.leq(sx, sy)) return ProbeFailure{"monotone", b.show(x) + " <= " + b.show(y)};
      if (!b.leq(b.mul(sx, sy), star(b.mul(x, y)))) return ProbeFailure{"nucleus", b.show(x) + ", " + b.show(y)};
    }
  }
  return std::nullopt;
}

// The same axioms on sampled pairs (xs[i], ys[i]) only.
template <StructureBackend B, class F>
std::optional<ProbeFailure> probe_nucleus_pairs(const B& b, const F& star, std::span<const typename B::Value> xs,
                                                std::span<const typename B::Value> ys) {
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    const auto& x = xs[i];
    const auto& y = ys[i];
    const auto sx = star(x), sy = star(y);
    if (!b.leq(x, sx)) return ProbeFailure{"expansive", b.show(x)};
    if (!equal(b, star(sx), sx)) return ProbeFailure{"idempotent", b.show(x)};
    if (b.leq(x, y) && !b.leq(sx, sy)) return ProbeFailure{"monotone", b.show(x) + " <= " + b.show(y)};
    if (b.leq(y, x) && !b.leq(sy, sx)) return ProbeFailure{"monotone", b.show(y) + " <= " + b.show(x)};
    if (!b.leq(b.mul(sx, sy), star(b.mul(x, y)))) return ProbeFailure{"nucleus", b.show(x) + ", " + b.show(y)};
  }
  return std::nullopt;
}

// x/y exists and x/(x/y) = y for all sampled x, y below the top.
template <StructureBackend B>
std::optional<ProbeFailure> probe_double_residual(const B& b, std::span<const typename B::Value> samples) {
  const auto top = b.top();
  auto below_top = [&](const auto& x) { return !top || !b.leq(*top, x); };
  for (const auto& x : samples) {
    if (!below_top(x)) continue;
    for (const auto& y : samples) {
      if (!below_top(y)) continue;
      auto xy = b.rdiv(x, y);
      if (!xy) return ProbeFailure{"residual exists", b.show(x) + " / " + b.show(y)};
      auto back = b.rdiv(x, *xy);
      if (!back || !equal(b, *back, y)) return ProbeFailure{"double residual", b.show(x) + " / " + b.show(y)};
    }
  }
  return std::nullopt;
}

// An increasing chain given by its terms, with its supremum.
template <class V>
struct DirectedChain {
  std::function<V(int)> term;
  V sup;
};

// (sup Δ)⋆ = sup Δ⋆ on each chain of the catalogue.
template <ChainSupBackend B, class F>
std::optional<ProbeFailure> probe_finitary(const B& b, const F& star,
                                           std::span<const DirectedChain<typename B::Value>> catalogue) {
  for (const auto& c : catalogue) {
    const auto lhs = star(c.sup);
    const auto rhs = b.chain_sup([&](int k) { return star(c.term(k)); });
    if (!equal(b, lhs, rhs)) return ProbeFailure{"finitary", "chain with supremum " + b.show(c.sup)};
  }
  return std::nullopt;
}

}  // namespace qlab
