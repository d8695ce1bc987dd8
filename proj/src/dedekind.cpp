#include "qlab/dedekind.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "qlab/error.hpp"

namespace qlab {

namespace {

using Exp = DedekindElem::Exp;
constexpr Exp kFull = DedekindElem::kFull;

void same_n(const DedekindElem& a, const DedekindElem& b) {
  if (a.n() != b.n()) fail(Errc::dimension_mismatch, "elements have " + std::to_string(a.n()) + " and " +
                                                         std::to_string(b.n()) + " components");
}

void same_n(const DedekindSemistar& op, const DedekindElem& x) {
  if (op.family.n != x.n())
    fail(Errc::dimension_mismatch, "operation on " + std::to_string(op.family.n) + " primes applied to " + x.str());
}

std::string trim(std::string s) {
  auto keep = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), keep));
  s.erase(std::find_if(s.rbegin(), s.rend(), keep).base(), s.end());
  return s;
}

}  // namespace

DedekindElem DedekindElem::indicator(int n, std::uint32_t t) {
  std::vector<Exp> c(n, 0);
  for (int i = 0; i < n; ++i)
    if ((t >> i) & 1u) c[i] = kFull;
  return DedekindElem(std::move(c));
}

std::uint32_t DedekindElem::support() const {
  std::uint32_t t = 0;
  for (int i = 0; i < n(); ++i)
    if (is_full(i)) t |= 1u << i;
  return t;
}

std::string DedekindElem::str() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) {
    if (i) s += ",";
    s += is_full(i) ? "F" : std::to_string(comps_[i]);
  }
  return s + ")";
}

DedekindElem parse_dedekind(const std::string& text) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<Exp> comps;
  std::stringstream ss(body);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok = trim(tok);
    if (tok == "F" || tok == "FULL" || tok == "full") {
      comps.push_back(kFull);
      continue;
    }
    Exp v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      fail(Errc::invalid_input, "bad exponent '" + tok + "' in " + text);
    comps.push_back(v);
  }
  if (comps.empty()) fail(Errc::invalid_input, "empty element literal");
  return DedekindElem(std::move(comps));
}

DedekindElem dmul(const DedekindElem& a, const DedekindElem& b) {
  same_n(a, b);
  std::vector<Exp> c(a.n());
  for (int i = 0; i < a.n(); ++i) c[i] = a.is_full(i) || b.is_full(i) ? kFull : a[i] + b[i];
  return DedekindElem(std::move(c));
}

bool dleq(const DedekindElem& a, const DedekindElem& b) {
  same_n(a, b);
  for (int i = 0; i < a.n(); ++i) {
    if (b.is_full(i)) continue;
    if (a.is_full(i) || a[i] < b[i]) return false;
  }
  return true;
}

DedekindElem dsup(std::span<const DedekindElem> xs) {
  if (xs.empty()) fail(Errc::invalid_input, "supremum of an empty list");
  std::vector<Exp> c = xs[0].comps();
  for (const auto& x : xs.subspan(1)) {
    same_n(xs[0], x);
    for (int i = 0; i < x.n(); ++i) c[i] = std::max(c[i], x[i]) == kFull ? kFull : std::min(c[i], x[i]);
  }
  return DedekindElem(std::move(c));
}

DedekindElem dinf(std::span<const DedekindElem> xs) {
  if (xs.empty()) fail(Errc::invalid_input, "infimum of an empty list");
  std::vector<Exp> c = xs[0].comps();
  for (const auto& x : xs.subspan(1)) {
    same_n(xs[0], x);
    for (int i = 0; i < x.n(); ++i) {
      if (c[i] == kFull) c[i] = x[i];
      else if (!x.is_full(i)) c[i] = std::max(c[i], x[i]);
    }
  }
  return DedekindElem(std::move(c));
}

std::optional<DedekindElem> ddiv(const DedekindElem& x, const DedekindElem& y) {
  same_n(x, y);
  std::vector<Exp> c(x.n());
  for (int i = 0; i < x.n(); ++i) {
    if (x.is_full(i)) c[i] = kFull;
    else if (y.is_full(i)) return std::nullopt;
    else c[i] = x[i] - y[i];
  }
  return DedekindElem(std::move(c));
}

std::vector<DedekindElem> compactness_witness(const DedekindElem& x, int length) {
  std::vector<DedekindElem> chain;
  for (int k = 0; k < length; ++k) {
    std::vector<Exp> c = x.comps();
    for (auto& e : c)
      if (e == kFull) e = -k;
    chain.emplace_back(std::move(c));
  }
  return chain;
}

DedekindElem DedekindSemistar::operator()(const DedekindElem& x) const {
  same_n(*this, x);
  const std::uint32_t cl = family.closure(x.support());
  std::vector<Exp> c = x.comps();
  for (int i = 0; i < x.n(); ++i)
    if ((cl >> i) & 1u) c[i] = kFull;
  return DedekindElem(std::move(c));
}

DedekindSemistar op_d(int n) { return {moore_generated(n, n == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1)}; }
DedekindSemistar op_e(int n) { return {moore_generated(n, 0)}; }
DedekindSemistar op_v(int n) { return {moore_generated(n, 1)}; }

DedekindSemistar op_star(int n, int i) {
  if (i < 1 || i > n) fail(Errc::invalid_input, "prime index out of range");
  const std::uint32_t full = (1u << n) - 1;
  const std::uint32_t rest = full & ~(1u << (i - 1));
  return {moore_from_sets(n, {rest, full})};
}

DedekindSemistar op_v_of(const DedekindElem& j) {
  return {moore_generated(j.n(), std::uint64_t{1} << j.support())};
}

DedekindSemistar op_meet(const DedekindSemistar& a, const DedekindSemistar& b) {
  if (a.family.n != b.family.n) fail(Errc::dimension_mismatch, "operations on different prime counts");
  return {moore_generated(a.family.n, a.family.members | b.family.members)};
}

namespace {

std::vector<std::pair<std::string, DedekindSemistar>> named_ops(int n) {
  std::vector<std::pair<std::string, DedekindSemistar>> out{{"d", op_d(n)}, {"e", op_e(n)}, {"v", op_v(n)}};
  for (int i = 1; i <= n; ++i) out.emplace_back("⋆" + std::to_string(i), op_star(n, i));
  for (int i = 1; i <= n; ++i) out.emplace_back("⋆" + std::to_string(i) + "∧v", op_meet(op_star(n, i), op_v(n)));
  return out;
}

std::string ascii_alias(std::string s) {
  for (auto [from, to] : {std::pair<std::string, std::string>{"star", "⋆"}, {"*", "⋆"}, {"^", "∧"}, {"&", "∧"}}) {
    for (std::size_t at; (at = s.find(from)) != std::string::npos;) s.replace(at, from.size(), to);
  }
  return s;
}

}  // namespace

DedekindSemistar parse_op(int n, const std::string& text) {
  const std::string t = trim(text);
  if (t.starts_with("[")) return {parse_family(n, t)};
  if (t.starts_with("v(") && t.ends_with(")")) {
    auto j = parse_dedekind(t.substr(2, t.size() - 3));
    if (j.n() != n) fail(Errc::dimension_mismatch, "v(J) literal has the wrong number of components");
    return op_v_of(j);
  }
  const std::string name = ascii_alias(t);
  for (auto& [k, op] : named_ops(n))
    if (k == name) return op;
  fail(Errc::invalid_input, "unknown operation '" + text + "'");
}

std::string op_name(const DedekindSemistar& op) {
  for (auto& [k, o] : named_ops(op.family.n))
    if (o.family == op.family) return k;
  return family_string(op.family);
}

bool op_leq(const DedekindSemistar& a, const DedekindSemistar& b) {
  if (a.family.n != b.family.n) fail(Errc::dimension_mismatch, "operations on different prime counts");
  return !order_witness(a, b).has_value();
}

std::optional<DedekindElem> order_witness(const DedekindSemistar& a, const DedekindSemistar& b) {
  // a <= b fails exactly when some member of b is not closed for a
  for (auto t : b.family.sets()) {
    auto x = DedekindElem::indicator(a.family.n, t);
    if (!dleq(a(x), b(x))) return x;
  }
  return std::nullopt;
}

SStarReport enumerate_sstar(int n) {
  SStarReport r;
  r.n = n;
  for (auto& f : enumerate_moore(n)) {
    r.ops.push_back({f});
    r.names.push_back(op_name(r.ops.back()));
  }
  const std::size_t k = r.ops.size();
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[r.ops[i].family.members] = i;
  // families differ by one set across every cover
  for (std::size_t i = 0; i < k; ++i)
    for (auto t : r.ops[i].family.sets()) {
      if (t == r.ops[i].family.full_mask()) continue;
      auto it = index.find(r.ops[i].family.members & ~(std::uint64_t{1} << t));
      if (it != index.end()) r.hasse.emplace_back(i, it->second);
    }
  std::sort(r.hasse.begin(), r.hasse.end());
  if (k <= 256) {
    r.leq.assign(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) r.leq[i][j] = op_leq(r.ops[i], r.ops[j]);
  }
  return r;
}

std::string sstar_dot(const SStarReport& r) {
  std::string s = "digraph sstar {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < r.ops.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + r.names[i] + "\"];\n";
  for (auto [lo, hi] : r.hasse) s += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  return s + "}\n";
}

MooreFamily left_inverse(const DedekindSemistar& op) {
  const int n = op.family.n;
  std::vector<std::uint32_t> closed;
  for (std::uint32_t t = 0; t < (1u << n); ++t) closed.push_back(op(DedekindElem::indicator(n, t)).support());
  return moore_from_sets(n, closed);
}

DedekindSemistar dedekind_finitary(const DedekindSemistar& op) {
  const int n = op.family.n;
  const std::uint32_t base = op.family.closure(0);
  std::vector<std::uint32_t> sets;
  for (std::uint32_t t = 0; t < (1u << n); ++t)
    if ((t & base) == base) sets.push_back(t);
  return {moore_from_sets(n, sets)};
}

DedekindSemistar dedekind_stable(const DedekindSemistar& op) { return dedekind_finitary(op); }

bool dedekind_is_gv(const DedekindSemistar& op, const DedekindElem& z) {
  same_n(op, z);
  const std::uint32_t base = op.family.closure(0);
  for (int i = 0; i < z.n(); ++i) {
    if (z.is_full(i) || z[i] < 0) return false;
    if (!((base >> i) & 1u) && z[i] != 0) return false;
  }
  return true;
}

std::vector<DedekindElem> sample_dedekind(int n, std::size_t count, std::uint64_t seed, int window) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Exp> exp(-window, window);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<DedekindElem> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<Exp> c(n);
    for (auto& e : c) e = coin(rng) == 0 ? kFull : exp(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

DedekindElem DedekindBackend::chain_sup(const std::function<DedekindElem(int)>& term) const {
  constexpr int kFar = 1 << 12;
  const auto a = term(kFar), b = term(2 * kFar);
  std::vector<Exp> c(n_);
  for (int i = 0; i < n_; ++i) c[i] = a.is_full(i) || b.is_full(i) || b[i] < a[i] ? kFull : b[i];
  return DedekindElem(std::move(c));
}

std::vector<DirectedChain<DedekindElem>> DedekindBackend::chains(std::span<const DedekindElem> bases) const {
  std::vector<DirectedChain<DedekindElem>> out;
  for (const auto& base : bases)
    for (int i = 0; i < n_; ++i) {
      if (base.is_full(i)) continue;
      auto sup = base.comps();
      sup[i] = kFull;
      out.push_back({[base, i](int k) {
                       auto c = base.comps();
                       c[i] -= k;
                       return DedekindElem(std::move(c));
                     },
                     DedekindElem(std::move(sup))});
    }
  return out;
}

bool ZInfBackend::leq(const ZVal& x, const ZVal& y) const {
  if (x.kind != y.kind) return x.kind < y.kind;
  return x.kind != ZVal::finite || x.v <= y.v;
}

ZVal ZInfBackend::mul(const ZVal& x, const ZVal& y) const {
  if (x.kind == ZVal::neg_inf || y.kind == ZVal::neg_inf) return {ZVal::neg_inf, 0};
  if (x.kind == ZVal::pos_inf || y.kind == ZVal::pos_inf) return {ZVal::pos_inf, 0};
  return {ZVal::finite, x.v + y.v};
}

std::optional<ZVal> ZInfBackend::rdiv(const ZVal& x, const ZVal& y) const {
  const ZVal bottom{ZVal::neg_inf, 0}, top{ZVal::pos_inf, 0};
  if (y.kind == ZVal::neg_inf) return top;
  if (x.kind == ZVal::pos_inf) return top;
  if (y.kind == ZVal::finite) {
    if (x.kind == ZVal::finite) return ZVal{ZVal::finite, x.v - y.v};
    return bottom;
  }
  // y = ∞ and x below ∞: only −∞ times ∞ stays below x
  if (!bottom_) return std::nullopt;
  return bottom;
}

std::string ZInfBackend::show(const ZVal& x) const {
  switch (x.kind) {
    case ZVal::neg_inf:
      return "-inf";
    case ZVal::pos_inf:
      return "inf";
    default:
      return std::to_string(x.v);
  }
}

ZVal ZInfBackend::chain_sup(const std::function<ZVal(int)>& term) const {
  constexpr int kFar = 1 << 12;
  const auto a = term(kFar), b = term(2 * kFar);
  if (b.kind == ZVal::finite && a.kind == ZVal::finite && b.v > a.v) return {ZVal::pos_inf, 0};
  return b;
}

std::vector<ZVal> ZInfBackend::window(std::int64_t lo, std::int64_t hi) const {
  std::vector<ZVal> out;
  if (bottom_) out.push_back({ZVal::neg_inf, 0});
  for (auto v = lo; v <= hi; ++v) out.push_back({ZVal::finite, v});
  out.push_back({ZVal::pos_inf, 0});
  return out;
}

ZVal zinf_collapse(const ZVal& x) { return x.kind == ZVal::neg_inf ? x : ZVal{ZVal::pos_inf, 0}; }

}  // namespace qlab
