#include "qlab/powerset.hpp"

#include "qlab/error.hpp"
#include "qlab/limits.hpp"

namespace qlab {

MagmaTable cyclic_group(std::size_t n) {
  if (n == 0) fail(Errc::invalid_input, "cyclic group needs order at least 1");
  MagmaTable t;
  t.name = "C" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.mul.push_back(static_cast<Elem>((i + j) % n));
  return t;
}

MagmaTable magma_of(const FinOrderedMagma& m) { return {m.name(), m.poset().labels(), m.table()}; }

FinOrderedMagma powerset_structure(const MagmaTable& base, bool adjoin_zero, bool nonempty_only) {
  if (base.size() == 0) fail(Errc::invalid_input, "base magma is empty");
  if (base.mul.size() != base.size() * base.size()) fail(Errc::invalid_input, "base magma table is not total");
  if (base.size() > limits().powerset_base)
    fail(Errc::size_limit_exceeded, "power set base has " + std::to_string(base.size()) + " elements, limit " +
                                        std::to_string(limits().powerset_base));

  PowersetInfo info;
  info.base_labels = base.labels;
  const std::size_t b = base.size();
  const std::size_t k = b + (adjoin_zero ? 1 : 0);
  if (adjoin_zero) {
    info.zero = static_cast<Elem>(b);
    for (const auto& l : base.labels)
      if (l == "0") fail(Errc::invalid_input, "base magma already has an element labelled 0");
    info.base_labels.push_back("0");
  }
  info.base_mul.assign(k * k, 0);
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      info.base_mul[x * k + y] = (x < b && y < b) ? base.at(x, y) : static_cast<Elem>(b);
  info.nonempty_only = nonempty_only;

  for (ElemSet::Mask s = nonempty_only ? 1 : 0; s < (ElemSet::Mask{1} << k); ++s) info.subsets.emplace_back(s);
  const std::size_t n = info.subsets.size();
  std::vector<Elem> index(ElemSet::Mask{1} << k, 0);
  std::vector<std::string> labels;
  for (Elem i = 0; i < n; ++i) {
    index[info.subsets[i].mask()] = i;
    std::string l = "{";
    bool first = true;
    for (Elem e : info.subsets[i]) {
      if (!first) l += ",";
      l += info.base_labels[e];
      first = false;
    }
    labels.push_back(l + "}");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (i != j && info.subsets[i].subset_of(info.subsets[j])) pairs.emplace_back(i, j);
  std::vector<Elem> table;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      ElemSet prod;
      for (Elem x : info.subsets[i])
        for (Elem y : info.subsets[j]) prod.insert(info.base_mul[x * k + y]);
      table.push_back(index[prod.mask()]);
    }
  std::string name = "2^" + (base.name.empty() ? std::string("M") : base.name);
  if (adjoin_zero) name += "_0";
  if (nonempty_only) name += "\\{}";
  FinOrderedMagma m(name, FinPoset::from_pairs(labels, pairs), std::move(table));
  m.set_powerset_info(std::move(info));
  return m;
}

FinOrderedMagma boolean_lattice(std::size_t n) {
  if (n > 6) fail(Errc::size_limit_exceeded, "boolean lattice limited to 2^6 elements");
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < total; ++s) {
    std::string l = "{";
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) l += (l.size() > 1 ? "," : "") + std::to_string(i + 1);
    labels.push_back(l + "}");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Elem> table;
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      if (a != b && (a & ~b) == 0) pairs.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
      table.push_back(static_cast<Elem>(a & b));
    }
  return FinOrderedMagma("2^[" + std::to_string(n) + "]", FinPoset::from_pairs(labels, pairs), std::move(table));
}

}  // namespace qlab
