#pragma once

#include <vector>

#include "qlab/magma.hpp"
#include "qlab/magma_ops.hpp"

namespace qlab {

// Smallest ideal containing a nonempty X: down-closure of its finite joins.
ElemSet down_set(const FinOrderedMagma& m, ElemSet x);

struct IdealStructure {
  FinOrderedMagma base;
  std::vector<ElemSet> ideals;
  FinOrderedMagma structure;  // ideals under inclusion with (I, J) ↦ ↓(IJ)
};

// Needs a multiplicative semilattice.
IdealStructure ideal_completion(const FinOrderedMagma& m);

struct MagmaMorphism {
  FinOrderedMagma source, target;
  SelfMap map;
  bool ordered_magma = false;             // monotone and multiplicative
  bool multiplicative_semilattice = false;  // also keeps nonempty finite joins
  bool near_prequantale = false;          // also keeps nonempty suprema
  bool precoherent = false;               // near prequantale morphism keeping compacts
};

// Throws NotAMorphism unless f is an order-preserving magma homomorphism.
MagmaMorphism make_morphism(const FinOrderedMagma& source, const FinOrderedMagma& target, SelfMap map);
MagmaMorphism compose(const MagmaMorphism& g, const MagmaMorphism& f);  // g after f
MagmaMorphism identity_morphism(const FinOrderedMagma& m);
bool same_map(const MagmaMorphism& a, const MagmaMorphism& b);

// x ↦ ↓x into K(Idl(M)); throws IsomorphismFailure if it is not one.
MagmaMorphism unit_iso(const FinOrderedMagma& m);
// I ↦ sup I from Idl(K(L)) to L.
MagmaMorphism counit_iso(const FinOrderedMagma& l);

// Restriction to compact elements.
MagmaMorphism k_functor(const MagmaMorphism& f);
// I ↦ ↓g(I).
MagmaMorphism idl_functor(const MagmaMorphism& g);

}  // namespace qlab
