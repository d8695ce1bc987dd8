#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlab/backend.hpp"
#include "qlab/moore.hpp"

namespace qlab {

// Nonzero fractional ideal of a semilocal Dedekind domain with n maximal
// ideals: an exponent per prime, or FULL where the localization is the whole
// quotient field.
class DedekindElem {
 public:
  using Exp = std::int64_t;
  static constexpr Exp kFull = std::numeric_limits<Exp>::max();

  DedekindElem() = default;
  explicit DedekindElem(std::vector<Exp> comps) : comps_(std::move(comps)) {}
  static DedekindElem unit(int n) { return DedekindElem(std::vector<Exp>(n, 0)); }        // D
  static DedekindElem full(int n) { return DedekindElem(std::vector<Exp>(n, kFull)); }    // F
  static DedekindElem indicator(int n, std::uint32_t t);  // FULL on t, 0 elsewhere

  int n() const { return static_cast<int>(comps_.size()); }
  Exp operator[](int i) const { return comps_[i]; }
  bool is_full(int i) const { return comps_[i] == kFull; }
  const std::vector<Exp>& comps() const { return comps_; }
  std::uint32_t support() const;  // I_D as a mask
  bool is_compact() const { return support() == 0; }
  std::string str() const;

  friend bool operator==(const DedekindElem&, const DedekindElem&) = default;

 private:
  std::vector<Exp> comps_;
};

DedekindElem parse_dedekind(const std::string& text);  // "1,-2,F"

DedekindElem dmul(const DedekindElem& a, const DedekindElem& b);
bool dleq(const DedekindElem& a, const DedekindElem& b);  // inclusion
DedekindElem dsup(std::span<const DedekindElem> xs);
DedekindElem dinf(std::span<const DedekindElem> xs);
std::optional<DedekindElem> ddiv(const DedekindElem& x, const DedekindElem& y);  // x/y
// Increasing chain with unbounded supremum in each non-compact coordinate of sup.
std::vector<DedekindElem> compactness_witness(const DedekindElem& x, int length);

// Semistar operation induced by a Moore family on the primes.
struct DedekindSemistar {
  MooreFamily family;
  DedekindElem operator()(const DedekindElem& x) const;
};

DedekindSemistar op_d(int n);
DedekindSemistar op_e(int n);
DedekindSemistar op_v(int n);
DedekindSemistar op_star(int n, int i);  // localization at prime i (1-based)
DedekindSemistar op_v_of(const DedekindElem& j);
DedekindSemistar op_meet(const DedekindSemistar& a, const DedekindSemistar& b);
// d, e, v, star<i>, star<i>^v, v(J) for a J literal, or a family literal.
DedekindSemistar parse_op(int n, const std::string& text);
std::string op_name(const DedekindSemistar& op);  // named when known, else the family

bool op_leq(const DedekindSemistar& a, const DedekindSemistar& b);  // pointwise
// An element with a(x) not below b(x), when one exists.
std::optional<DedekindElem> order_witness(const DedekindSemistar& a, const DedekindSemistar& b);

struct SStarReport {
  int n = 0;
  std::vector<DedekindSemistar> ops;  // moore enumeration order
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, upper)
  std::vector<std::vector<char>> leq;
};
SStarReport enumerate_sstar(int n);
std::string sstar_dot(const SStarReport& r);

// Recovers the family from the images of indicator elements.
MooreFamily left_inverse(const DedekindSemistar& op);

// Finitary part and stable core: FULL on I_D together with cl(∅).
DedekindSemistar dedekind_finitary(const DedekindSemistar& op);
DedekindSemistar dedekind_stable(const DedekindSemistar& op);
// z is ⋆-GV iff z_i = 0 off cl(∅) and z_i >= 0 on cl(∅).
bool dedekind_is_gv(const DedekindSemistar& op, const DedekindElem& z);

std::vector<DedekindElem> sample_dedekind(int n, std::size_t count, std::uint64_t seed, int window = 8);

class DedekindBackend {
 public:
  using Value = DedekindElem;
  explicit DedekindBackend(int n) : n_(n) {}
  bool leq(const Value& x, const Value& y) const { return dleq(x, y); }
  Value mul(const Value& x, const Value& y) const { return dmul(x, y); }
  std::optional<Value> rdiv(const Value& x, const Value& y) const { return ddiv(x, y); }
  bool is_compact(const Value& x) const { return x.is_compact(); }
  std::optional<Value> top() const { return DedekindElem::full(n_); }
  std::string show(const Value& x) const { return x.str(); }
  Value chain_sup(const std::function<Value(int)>& term) const;
  // Chains p_i^{-k} * base for each prime and each base.
  std::vector<DirectedChain<Value>> chains(std::span<const Value> bases) const;

 private:
  int n_;
};

// ℤ[∞] and ℤ[±∞].
struct ZVal {
  enum Kind : std::uint8_t { neg_inf, finite, pos_inf };
  Kind kind = finite;
  std::int64_t v = 0;
  friend bool operator==(const ZVal&, const ZVal&) = default;
};

class ZInfBackend {
 public:
  using Value = ZVal;
  explicit ZInfBackend(bool with_bottom) : bottom_(with_bottom) {}
  bool with_bottom() const { return bottom_; }
  bool leq(const Value& x, const Value& y) const;
  Value mul(const Value& x, const Value& y) const;
  std::optional<Value> rdiv(const Value& x, const Value& y) const;
  bool is_compact(const Value& x) const { return x.kind != ZVal::pos_inf; }
  std::optional<Value> top() const { return ZVal{ZVal::pos_inf, 0}; }
  std::string show(const Value& x) const;
  Value chain_sup(const std::function<Value(int)>& term) const;
  // [lo, hi] together with ∞ and, with a bottom, −∞.
  std::vector<Value> window(std::int64_t lo, std::int64_t hi) const;

 private:
  bool bottom_;
};

// −∞ ↦ −∞, everything else ↦ ∞.
ZVal zinf_collapse(const ZVal& x);

static_assert(ChainSupBackend<DedekindBackend>);
static_assert(ChainSupBackend<ZInfBackend>);

}  // namespace qlab
