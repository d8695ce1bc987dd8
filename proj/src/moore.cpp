#include "qlab/moore.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include <json.hpp>

#include "qlab/error.hpp"
#include "qlab/limits.hpp"

namespace qlab {

namespace {

constexpr int kMaxGround = 6;
constexpr int kMaxCount = 5;
constexpr int kShardDepth = 8;

void require_ground(int n) {
  if (n < 0 || n > kMaxGround) fail(Errc::size_limit_exceeded, "ground set size must be between 0 and 6");
}

std::uint32_t closure_below(int n, std::uint64_t fam, std::uint32_t t) {
  std::uint32_t c = (1u << n) - 1;
  for (std::uint64_t bits = fam; bits; bits &= bits - 1) {
    const auto a = static_cast<std::uint32_t>(std::countr_zero(bits));
    if ((a & t) == t) c &= a;
  }
  return c;
}

// Masks are decided from the top down. A mask that is already the
// intersection of the members above it must be taken; any other is free.
struct Walker {
  int n;

  std::uint64_t count(std::uint64_t fam, int m) const {
    std::uint64_t total = 0;
    for (; m >= 0; --m) {
      const auto t = static_cast<std::uint32_t>(m);
      if (closure_below(n, fam, t) == t) {
        fam |= std::uint64_t{1} << t;
        continue;
      }
      total += count(fam | (std::uint64_t{1} << t), m - 1);
    }
    return total + 1;
  }

  // Calls f on every partial family once masks above stop are decided.
  template <class F>
  void each(std::uint64_t fam, int m, int stop, F& f) const {
    if (m == stop) {
      f(fam);
      return;
    }
    const auto t = static_cast<std::uint32_t>(m);
    const auto with = fam | (std::uint64_t{1} << t);
    each(with, m - 1, stop, f);
    if (closure_below(n, fam, t) != t) each(fam, m - 1, stop, f);
  }
};

}  // namespace

std::size_t MooreFamily::size() const { return static_cast<std::size_t>(std::popcount(members)); }

std::vector<std::uint32_t> MooreFamily::sets() const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t bits = members; bits; bits &= bits - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)));
  return out;
}

std::uint32_t MooreFamily::closure(std::uint32_t t) const { return closure_below(n, members, t); }

bool MooreFamily::is_moore() const {
  if (!contains(full_mask())) return false;
  if (n < 6 && (members >> (1u << n)) != 0) return false;
  for (auto a : sets())
    for (auto b : sets())
      if (!contains(a & b)) return false;
  return true;
}

MooreFamily moore_from_sets(int n, const std::vector<std::uint32_t>& sets) {
  require_ground(n);
  MooreFamily f{n, 0};
  for (auto t : sets) {
    if (t > f.full_mask()) fail(Errc::invalid_input, "subset outside the ground set");
    f.members |= std::uint64_t{1} << t;
  }
  return f;
}

MooreFamily moore_generated(int n, std::uint64_t members) {
  auto f = moore_from_sets(n, {});
  f.members = members | (std::uint64_t{1} << f.full_mask());
  for (bool grew = true; grew;) {
    grew = false;
    for (auto a : f.sets())
      for (auto b : f.sets())
        if (!f.contains(a & b)) {
          f.members |= std::uint64_t{1} << (a & b);
          grew = true;
        }
  }
  return f;
}

std::string family_string(const MooreFamily& f) {
  std::vector<std::vector<int>> lists;
  for (auto t : f.sets()) {
    std::vector<int> s;
    for (int i = 0; i < f.n; ++i)
      if ((t >> i) & 1u) s.push_back(i + 1);
    lists.push_back(std::move(s));
  }
  std::sort(lists.begin(), lists.end());
  return nlohmann::json(lists).dump();
}

MooreFamily parse_family(int n, const std::string& text) {
  require_ground(n);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_input, std::string("family literal: ") + e.what());
  }
  if (!j.is_array()) fail(Errc::invalid_input, "family literal must be a list of index lists");
  std::vector<std::uint32_t> sets;
  for (const auto& s : j) {
    if (!s.is_array()) fail(Errc::invalid_input, "family literal must be a list of index lists");
    std::uint32_t t = 0;
    for (const auto& i : s) {
      if (!i.is_number_integer() || i.get<int>() < 1 || i.get<int>() > n)
        fail(Errc::invalid_input, "index out of range in family literal");
      t |= 1u << (i.get<int>() - 1);
    }
    sets.push_back(t);
  }
  auto f = moore_from_sets(n, sets);
  if (!f.is_moore()) fail(Errc::invalid_input, "family is not intersection-closed with the full set");
  return f;
}

BigCount count_moore(int n, unsigned threads) {
  if (n < 0) fail(Errc::invalid_input, "negative ground set size");
  if (n > kMaxCount) fail(Errc::size_limit_exceeded, "moore count is limited to ground sets of at most 5 elements");
  const Walker w{n};
  const int full = (1 << n) - 1;
  const std::uint64_t start = std::uint64_t{1} << full;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const int stop = full - 1 - kShardDepth;
  if (threads == 1 || stop < 0) return BigCount(w.count(start, full - 1));
  std::vector<std::uint64_t> shards;
  auto collect = [&](std::uint64_t fam) { shards.push_back(fam); };
  w.each(start, full - 1, stop, collect);

  std::vector<std::uint64_t> counts(shards.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < shards.size();) counts[i] = w.count(shards[i], stop);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  pool.clear();
  BigCount total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<MooreFamily> enumerate_moore(int n) {
  if (n < 0) fail(Errc::invalid_input, "negative ground set size");
  if (static_cast<std::size_t>(n) > limits().moore_materialize)
    fail(Errc::size_limit_exceeded, "materializing Moore families is limited to " +
                                        std::to_string(limits().moore_materialize) + " points");
  require_ground(n);
  const Walker w{n};
  const int full = (1 << n) - 1;
  std::vector<MooreFamily> out;
  auto push = [&](std::uint64_t fam) { out.push_back(MooreFamily{n, fam}); };
  w.each(std::uint64_t{1} << full, full - 1, -1, push);
  std::sort(out.begin(), out.end(), [](const MooreFamily& a, const MooreFamily& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.sets() < b.sets();
  });
  return out;
}

}  // namespace qlab
