#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlab/nucleus.hpp"

namespace qlab {

enum class DivisorialMethod {
  automatic,  // cyclic when it applies, else lin
  lin,        // sup of y with f(x) <= a => f(y) <= a over Lin(Q); near prequantale
  two_sided,  // same with x -> rxs; unital associative near prequantale
  cyclic,     // a/(a/x); monoid, residuated or near residuated with top, a cyclic
  semi_u,     // inf of uav >= x over units; associative unital semi-U-lattice
};

// Largest nucleus fixing a.
NucleusMap divisorial(const FinOrderedMagma& q, Elem a, DivisorialMethod method = DivisorialMethod::automatic);
bool divisorial_applies(const FinOrderedMagma& q, Elem a, DivisorialMethod method);
// Largest nucleus fixing every element of s; e when s is empty.
NucleusMap divisorial_set(const FinOrderedMagma& q, ElemSet s);
// Meet of v(a) over the fixed elements; throws ReconstructionMismatch if it differs.
NucleusMap reconstruct(const FinOrderedMagma& q, const NucleusMap& star);

struct SimpleReport {
  bool simple = false;
  std::optional<NucleusMap> witness;  // a nucleus other than d and e
  std::vector<Elem> checked;          // every a < top with v(a) = d, when simple
};
SimpleReport is_simple(const FinOrderedMagma& q);

// x ↦ sup of y⋆ over compact y <= x.
NucleusMap finitary_part(const FinOrderedMagma& q, const NucleusMap& star);
NucleusMap t_of(const FinOrderedMagma& q, Elem a);

// {z <= 1 : z⋆ = 1⋆}
ElemSet gv_elements(const FinOrderedMagma& q, const NucleusMap& star);

// Throws HypothesisNotMet unless q is a precoherent semimultiplicative lattice
// with residuated compacts and all x ∧ 1.
void require_stable_hypotheses(const FinOrderedMagma& q);
// x ↦ sup of x/z over GV elements z.
NucleusMap stable_core(const FinOrderedMagma& q, const NucleusMap& star);
NucleusMap star_w(const FinOrderedMagma& q, const NucleusMap& star);

// Finite meets preserved and (x/t)⋆ = x⋆/t, (t\x)⋆ = t\x⋆ for compact t.
bool is_stable(const FinOrderedMagma& q, const NucleusMap& star);

struct StableConditions {
  bool definition = false;      // stable
  bool meet_one_residual = false;  // (x∧1)⋆ = x⋆∧1⋆ and (x/t)⋆ = x⋆/t
  bool residual_meet_one = false;  // (x/t ∧ 1)⋆ = x⋆/t ∧ 1⋆
  bool equals_core = false;        // ⋆ equals its stable core
};
StableConditions stable_conditions(const FinOrderedMagma& q, const NucleusMap& star);

// Pointwise meet of stable nuclei; throws StabilityLost if the result is not stable.
NucleusMap meet_preserves_stable(const FinOrderedMagma& q, std::span<const NucleusMap> gamma);

}  // namespace qlab
