#pragma once

#include <optional>
#include <vector>

#include "qlab/magma.hpp"

namespace qlab {

// Self-map of a finite carrier as an image table.
using SelfMap = std::vector<Elem>;

SelfMap identity_map(std::size_t n);
SelfMap compose(const SelfMap& f, const SelfMap& g);  // f after g
ElemSet image_of(const SelfMap& f);
ElemSet fixed_points(const SelfMap& f);

enum class Side {
  left,   // max {z : z*y <= x}, written x/y
  right,  // max {z : y*z <= x}, written y\x
};

std::optional<Elem> residual(const FinOrderedMagma& m, Elem x, Elem y, Side side);
// x/y and y\x
inline std::optional<Elem> rdiv(const FinOrderedMagma& m, Elem x, Elem y) { return residual(m, x, y, Side::left); }
inline std::optional<Elem> ldiv(const FinOrderedMagma& m, Elem y, Elem x) { return residual(m, x, y, Side::right); }

// Every residual set is nonempty with a maximum.
bool is_residuated(const FinOrderedMagma& m);
// Every nonempty residual set has a maximum.
bool is_near_residuated(const FinOrderedMagma& m);

struct UnitsReport {
  ElemSet units;        // U(M): both translations are order automorphisms
  ElemSet invertibles;  // Inv(M): translations have translations as inverses
};
UnitsReport units_and_inverses(const FinOrderedMagma& m);

SelfMap left_translation(const FinOrderedMagma& m, Elem r);   // x -> r*x
SelfMap right_translation(const FinOrderedMagma& m, Elem s);  // x -> x*s
// Monoid generated by all translations (identity included).
std::vector<SelfMap> lin_maps(const FinOrderedMagma& m);

bool is_cyclic(const FinOrderedMagma& m, Elem a);
bool is_sup_spanning(const FinOrderedMagma& m, ElemSet sigma);
// T(M) for a self-map: {a : (ax)* = a x* and (xa)* = x* a for all x}.
ElemSet transportable(const FinOrderedMagma& m, const SelfMap& star);
// xy in X with x, y not annihilators forces x, y in X.
bool is_saturated(const FinOrderedMagma& m, ElemSet x);

}  // namespace qlab
