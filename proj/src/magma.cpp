#include "qlab/magma.hpp"

#include "qlab/error.hpp"

namespace qlab {

FinOrderedMagma::FinOrderedMagma(std::string name, FinPoset poset, std::vector<Elem> table)
    : name_(std::move(name)), poset_(std::move(poset)), table_(std::move(table)) {
  const auto n = static_cast<Elem>(size());
  if (table_.size() != std::size_t{n} * n) fail(Errc::invalid_input, "multiplication table is not total");
  for (Elem v : table_)
    if (v >= n) fail(Errc::invalid_input, "multiplication table entry out of range");

  // x <= x' implies xy <= x'y and yx <= yx'; both-sided monotonicity follows by transitivity.
  for (Elem x = 0; x < n; ++x)
    for (Elem x2 = 0; x2 < n; ++x2) {
      if (x == x2 || !leq(x, x2)) continue;
      for (Elem y = 0; y < n; ++y) {
        if (!leq(mul(x, y), mul(x2, y)))
          fail(Errc::non_monotone_mul, "NonMonotoneMul(" + label(x) + "," + label(x2) + "," + label(y) + "," + label(y) +
                                           "): " + label(x) + "*" + label(y) + " is not below " + label(x2) + "*" + label(y));
        if (!leq(mul(y, x), mul(y, x2)))
          fail(Errc::non_monotone_mul, "NonMonotoneMul(" + label(y) + "," + label(y) + "," + label(x) + "," + label(x2) +
                                           "): " + label(y) + "*" + label(x) + " is not below " + label(y) + "*" + label(x2));
      }
    }

  for (Elem e = 0; e < n && !identity_; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (auto z = poset_.least()) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = mul(*z, x) == *z && mul(x, *z) == *z;
    if (ok) annihilator_ = z;
  }
  commutative_ = true;
  for (Elem x = 0; x < n && commutative_; ++x)
    for (Elem y = x + 1; y < n && commutative_; ++y) commutative_ = mul(x, y) == mul(y, x);
  associative_ = true;
  for (Elem x = 0; x < n && associative_; ++x)
    for (Elem y = 0; y < n && associative_; ++y)
      for (Elem z = 0; z < n && associative_; ++z) associative_ = mul(mul(x, y), z) == mul(x, mul(y, z));
}

ElemSet FinOrderedMagma::product(ElemSet x, ElemSet y) const {
  ElemSet r;
  for (Elem a : x)
    for (Elem b : y) r.insert(mul(a, b));
  return r;
}

ElemSet FinOrderedMagma::generated(ElemSet x) const {
  ElemSet cur = x;
  for (;;) {
    ElemSet next = cur | product(cur, cur);
    if (next == cur) return cur;
    cur = next;
  }
}

bool FinOrderedMagma::closed_under_mul(ElemSet x) const { return product(x, x).subset_of(x); }

FinOrderedMagma validate_structure(const StructureSpec& spec) {
  auto probe = FinPoset::from_pairs(spec.elements, {});
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& [a, b] : spec.leq) pairs.emplace_back(probe.index_of(a), probe.index_of(b));
  auto poset = FinPoset::from_pairs(spec.elements, pairs);
  const std::size_t n = poset.size();
  if (spec.mul.size() != n) fail(Errc::invalid_input, "multiplication table needs " + std::to_string(n) + " rows");
  std::vector<Elem> table;
  table.reserve(n * n);
  for (const auto& row : spec.mul) {
    if (row.size() != n) fail(Errc::invalid_input, "multiplication row needs " + std::to_string(n) + " entries");
    for (const auto& v : row) table.push_back(poset.index_of(v));
  }
  FinOrderedMagma m(spec.name, std::move(poset), std::move(table));
  if (spec.identity) {
    auto i = m.poset().index_of(*spec.identity);
    if (m.identity() != i) fail(Errc::invalid_input, "asserted identity '" + *spec.identity + "' is not a two-sided identity");
  }
  if (spec.annihilator) {
    auto i = m.poset().index_of(*spec.annihilator);
    if (m.annihilator() != i)
      fail(Errc::invalid_input, "asserted annihilator '" + *spec.annihilator + "' is not a least absorbing element");
  }
  return m;
}

FinOrderedMagma substructure(const FinOrderedMagma& m, ElemSet carrier, std::string name) {
  if (!m.closed_under_mul(carrier)) fail(Errc::invalid_input, "subset is not closed under multiplication");
  auto elems = carrier.elements();
  std::vector<Elem> index(m.size(), 0);
  std::vector<std::string> labels;
  for (Elem i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
    labels.push_back(m.label(elems[i]));
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < elems.size(); ++i)
    for (Elem j = 0; j < elems.size(); ++j)
      if (i != j && m.leq(elems[i], elems[j])) pairs.emplace_back(i, j);
  std::vector<Elem> table;
  for (Elem a : elems)
    for (Elem b : elems) table.push_back(index[m.mul(a, b)]);
  return FinOrderedMagma(name.empty() ? m.name() + "|sub" : std::move(name), FinPoset::from_pairs(labels, pairs),
                         std::move(table));
}

}  // namespace qlab
