#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlab {

using BigCount = boost::multiprecision::cpp_int;

// Family of subsets of {0, ..., n-1}; bit T of members set when the subset
// with mask T belongs. Needs n <= 6.
struct MooreFamily {
  int n = 0;
  std::uint64_t members = 0;

  std::uint32_t full_mask() const { return (1u << n) - 1; }
  bool contains(std::uint32_t t) const { return (members >> t) & 1u; }
  std::size_t size() const;
  std::vector<std::uint32_t> sets() const;  // ascending masks
  // Smallest member containing t.
  std::uint32_t closure(std::uint32_t t) const;
  bool is_moore() const;

  friend bool operator==(const MooreFamily&, const MooreFamily&) = default;
};

MooreFamily moore_from_sets(int n, const std::vector<std::uint32_t>& sets);
// Closes under intersection and adds the full set.
MooreFamily moore_generated(int n, std::uint64_t members);
// Sorted lists of sorted 1-based indices, e.g. [[2],[1,2]].
std::string family_string(const MooreFamily& f);
MooreFamily parse_family(int n, const std::string& text);

// Intersection-closed families containing the full set. threads = 0 picks the
// hardware concurrency; the result never depends on it.
BigCount count_moore(int n, unsigned threads = 1);
// Ordered by size, then by the ascending list of member masks.
std::vector<MooreFamily> enumerate_moore(int n);

}  // namespace qlab
