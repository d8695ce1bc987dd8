#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qlab/nucleus.hpp"

namespace qlab {

struct NucleusLattice {
  std::vector<NucleusMap> nuclei;  // canonical order
  std::vector<std::vector<char>> leq;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, upper) covers

  std::optional<std::size_t> index_of(const NucleusMap& n) const;
  std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> join(std::size_t i, std::size_t j) const;
};

NucleusLattice nucleus_lattice(const FinOrderedMagma& m);

// Pointwise infimum; e for an empty family.
NucleusMap meet_nuclei(const FinOrderedMagma& m, std::span<const NucleusMap> gamma);
// Closure fixing the intersection of the fixed sets; d for an empty family.
NucleusMap join_nuclei(const FinOrderedMagma& m, std::span<const NucleusMap> gamma);

// A nucleus on a submagma N, given on the elements of N (other entries ignored).
struct SubNucleus {
  ElemSet carrier;
  SelfMap map;
};

// Smallest nucleus extending star; N sup-spanning, m a near prequantale.
NucleusMap induce_lower(const FinOrderedMagma& m, const SubNucleus& star);
// Largest nucleus extending star; N saturated, downward closed, m bounded above.
NucleusMap induce_upper(const FinOrderedMagma& m, const SubNucleus& star);

// Fix(⋆) with (x, y) ↦ (xy)⋆.
FinOrderedMagma quotient(const FinOrderedMagma& m, const NucleusMap& star);

struct SystemReport {
  bool is_nucleus = false;
  bool is_module_system = false;      // nucleus with ∅ ↦ {0}
  bool is_weak_ideal_system = false;  // nucleus with {0} ↦ ∅⋆ and {1} ↦ M_0
  bool is_ideal_system = false;       // additionally all singletons transportable
  // the same notions from their closure-operation definitions
  bool module_by_definition = false;
  bool weak_ideal_by_definition = false;
  bool ideal_by_definition = false;
};

SystemReport system_predicates(const FinOrderedMagma& p, const SelfMap& r);

}  // namespace qlab
