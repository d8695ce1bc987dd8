#pragma once

#include <string>
#include <vector>

#include "qlab/magma.hpp"

namespace qlab {

// A magma given by its table only (no order).
struct MagmaTable {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Elem> mul;  // row-major

  std::size_t size() const { return labels.size(); }
  Elem at(Elem a, Elem b) const { return mul[a * size() + b]; }
};

MagmaTable cyclic_group(std::size_t n);  // labels e, g, g2, ...
MagmaTable magma_of(const FinOrderedMagma& m);

// 2^M, 2^{M_0} (adjoin_zero) or 2^M \ {∅} (nonempty_only), ordered by
// inclusion with the complex product.
FinOrderedMagma powerset_structure(const MagmaTable& base, bool adjoin_zero, bool nonempty_only);

// Boolean lattice 2^{[n]} with intersection as multiplication.
FinOrderedMagma boolean_lattice(std::size_t n);

}  // namespace qlab
