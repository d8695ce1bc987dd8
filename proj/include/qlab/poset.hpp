#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlab/elem_set.hpp"

namespace qlab {

// Finite partial order. The relation is stored densely so any size works;
// ElemSet queries additionally need size() <= 64.
class FinPoset {
 public:
  FinPoset() = default;

  // Takes the reflexive-transitive closure of pairs, then rejects cycles.
  static FinPoset from_pairs(std::vector<std::string> labels, const std::vector<std::pair<Elem, Elem>>& pairs);
  static FinPoset chain(std::vector<std::string> labels);
  static FinPoset antichain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(std::string_view label) const;
  Elem index_of(std::string_view label) const;  // throws UnknownLabel

  bool leq(Elem a, Elem b) const { return rel_[a * size() + b] != 0; }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }

  bool masked() const { return size() <= 64; }
  void require_masked() const;
  ElemSet all() const { return ElemSet::full(size()); }
  ElemSet up(Elem x) const { return ElemSet(up_[x]); }
  ElemSet down(Elem x) const { return ElemSet(down_[x]); }
  ElemSet upper_bounds(ElemSet x) const;
  ElemSet lower_bounds(ElemSet x) const;
  std::optional<Elem> least_of(ElemSet x) const;
  std::optional<Elem> greatest_of(ElemSet x) const;
  std::optional<Elem> sup(ElemSet x) const;
  std::optional<Elem> inf(ElemSet x) const;
  ElemSet minimal_of(ElemSet x) const;
  ElemSet maximal_of(ElemSet x) const;
  ElemSet down_closure(ElemSet x) const;
  bool is_down_closed(ElemSet x) const;
  bool is_directed(ElemSet x) const;

  // Index-list variants, valid at any size.
  std::optional<Elem> sup(std::span<const Elem> xs) const;
  std::optional<Elem> inf(std::span<const Elem> xs) const;

  std::optional<Elem> join(Elem a, Elem b) const;
  std::optional<Elem> meet(Elem a, Elem b) const;
  std::optional<Elem> least() const { return least_; }
  std::optional<Elem> greatest() const { return greatest_; }

  std::vector<std::pair<Elem, Elem>> covers() const;
  // Every element appears after all elements strictly below it.
  std::vector<Elem> linear_extension() const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) { return a.labels_ == b.labels_ && a.rel_ == b.rel_; }

 private:
  void finish();

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> rel_;
  std::vector<ElemSet::Mask> up_, down_;
  std::optional<Elem> least_, greatest_;
};

}  // namespace qlab
