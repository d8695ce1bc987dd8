#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/magma.hpp"

namespace qlab {

// Flags decided by quantifying over subsets of the carrier, straight from
// their definitions. nullopt when the carrier is too large to scan.
struct LiteralFlags {
  std::optional<bool> s, ns, d, bc, p, np, sp, ps, ms, t, r, nr;
  std::optional<ElemSet> compacts;
};

struct StructureClass {
  bool s = false, ns = false, d = false, bc = false, b = false, a = false;
  bool p = false, np = false, sp = false, ps = false, ms = false, t = false, r = false, nr = false;

  bool associative = false, commutative = false, unital = false;
  bool quantale = false, near_quantale = false, semiquantale = false;
  bool multiplicative_lattice = false, near_multiplicative_lattice = false, semimultiplicative_lattice = false;
  bool frame = false;
  bool units_sup_spanning = false;
  bool u_lattice = false, near_u_lattice = false, semi_u_lattice = false;
  bool precoherent = false, coherent = false;

  std::optional<LiteralFlags> literal;

  // (name, value) for every flag, in a fixed order.
  std::vector<std::pair<std::string, bool>> entries() const;
};

struct ClassifyOptions {
  bool literal = false;  // also run the subset-quantifying definitions
  bool strict = false;   // with literal: SizeLimitExceeded instead of Unknown
};

StructureClass classify(const FinOrderedMagma& m, ClassifyOptions opts = {});

// Implications between classes that must hold for every structure; returns the
// violated ones as "x=>y".
std::vector<std::string> implication_violations(const StructureClass& c);

// Compact elements. The literal path quantifies over directed subsets.
ElemSet compacts(const FinPoset& p);
ElemSet compacts_literal(const FinPoset& p);

}  // namespace qlab
