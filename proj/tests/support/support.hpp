#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "qlab/magma.hpp"
#include "qlab/magma_ops.hpp"
#include "qlab/powerset.hpp"

namespace qlab::testing {

using Rng = std::mt19937_64;

// Random order on n labelled points, as cover-free generating pairs.
FinPoset random_poset(Rng& rng, std::size_t n, double density = 0.4);

// Ordered monoid with at most max_size elements, found by backtracking on the
// table. The identity is a random element.
FinOrderedMagma random_ordered_monoid(Rng& rng, std::size_t max_size, bool commutative = false);

// Subsets of a base magma closed under union and complex product: always a
// multiplicative semilattice, a near prequantale when finite.
struct SetFamily {
  MagmaTable base;
  std::vector<std::uint32_t> sets;  // ascending masks
};
MagmaTable random_magma(Rng& rng, std::size_t n);
SetFamily close_family(const MagmaTable& base, std::vector<std::uint32_t> seeds, bool with_empty);
FinOrderedMagma family_structure(const SetFamily& f, const std::string& name);
// Index of each set of `inner` inside `outer`.
SelfMap family_inclusion(const SetFamily& inner, const SetFamily& outer);

// Random family structure with at most max_size elements.
SetFamily random_family(Rng& rng, std::size_t max_size, std::size_t base_size = 3);

// Brute force over every self-map of m.
void for_each_map(std::size_t n, const std::function<void(const SelfMap&)>& f);
bool oracle_is_closure(const FinOrderedMagma& m, const SelfMap& f);
bool oracle_is_nucleus(const FinOrderedMagma& m, const SelfMap& f);
std::vector<SelfMap> oracle_closures(const FinOrderedMagma& m);
std::vector<SelfMap> oracle_nuclei(const FinOrderedMagma& m);
bool oracle_leq(const FinOrderedMagma& m, const SelfMap& a, const SelfMap& b);
// Greatest / least element of v in the pointwise order.
std::optional<SelfMap> oracle_max(const FinOrderedMagma& m, const std::vector<SelfMap>& v);
std::optional<SelfMap> oracle_glb(const FinOrderedMagma& m, const std::vector<SelfMap>& v, const SelfMap& a,
                                  const SelfMap& b);
std::optional<SelfMap> oracle_lub(const FinOrderedMagma& m, const std::vector<SelfMap>& v, const SelfMap& a,
                                  const SelfMap& b);

std::optional<Elem> oracle_rdiv(const FinOrderedMagma& m, Elem x, Elem y);  // max z with zy <= x
std::optional<Elem> oracle_ldiv(const FinOrderedMagma& m, Elem y, Elem x);  // max z with yz <= x
// Binary meets kept and both residuals by any element commute with f.
bool oracle_is_stable(const FinOrderedMagma& m, const SelfMap& f);

// Intersection-closed families containing the full set, by scanning all
// 2^(2^n) families.
std::uint64_t oracle_moore_count(int n);

// Fixtures with at most max_size elements, including a few built here.
std::vector<FinOrderedMagma> small_fixtures(std::size_t max_size);

}  // namespace qlab::testing
