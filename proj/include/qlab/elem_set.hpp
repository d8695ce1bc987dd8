#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace qlab {

using Elem = std::uint32_t;

// Subset of a carrier with at most 64 elements, one bit per element index.
class ElemSet {
 public:
  using Mask = std::uint64_t;

  class iterator {
   public:
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;
    iterator() = default;
    explicit iterator(Mask m) : rest_(m) {}
    Elem operator*() const { return static_cast<Elem>(std::countr_zero(rest_)); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ElemSet() = default;
  constexpr explicit ElemSet(Mask m) : mask_(m) {}
  ElemSet(std::initializer_list<Elem> xs) {
    for (Elem x : xs) insert(x);
  }

  static constexpr ElemSet single(Elem x) { return ElemSet(Mask{1} << x); }
  static constexpr ElemSet full(std::size_t n) { return ElemSet(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1); }

  constexpr Mask mask() const { return mask_; }
  constexpr bool contains(Elem x) const { return (mask_ >> x) & 1u; }
  constexpr void insert(Elem x) { mask_ |= Mask{1} << x; }
  constexpr void erase(Elem x) { mask_ &= ~(Mask{1} << x); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool subset_of(ElemSet o) const { return (mask_ & ~o.mask_) == 0; }
  Elem first() const { return static_cast<Elem>(std::countr_zero(mask_)); }

  iterator begin() const { return iterator(mask_); }
  iterator end() const { return iterator(0); }
  std::vector<Elem> elements() const { return {begin(), end()}; }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.mask_ | b.mask_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.mask_ & b.mask_); }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.mask_ & ~b.mask_); }
  constexpr ElemSet& operator|=(ElemSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr ElemSet& operator&=(ElemSet o) {
    mask_ &= o.mask_;
    return *this;
  }
  friend constexpr bool operator==(ElemSet, ElemSet) = default;
  friend constexpr auto operator<=>(ElemSet a, ElemSet b) { return a.mask_ <=> b.mask_; }

 private:
  Mask mask_ = 0;
};

}  // namespace qlab
