#pragma once

#include <string>
#include <vector>

#include "qlab/magma.hpp"
#include "qlab/powerset.hpp"

namespace qlab::fixtures {

FinOrderedMagma chain3q();    // z < m < u, u identity, z annihilator, m·m = z
FinOrderedMagma bool2();      // 0, a, b, ab under inclusion with meet
FinOrderedMagma diamond();    // bot < left, right < top with meet
FinOrderedMagma one();        // {*}
FinOrderedMagma two();        // 0 < 1 with min
FinOrderedMagma chain3min();  // 0 < h < 1 with min
FinOrderedMagma chain4max();  // z < u < s < t, z annihilator, max elsewhere
FinOrderedMagma powerset_c2();            // 2^{C2}
FinOrderedMagma powerset_nonassoc();      // 2^N for a non-associative N of size 2
FinOrderedMagma powerset_trivial_zero();  // 2^{{e,0}}
MagmaTable nonassoc_magma();

StructureSpec nonmonotone_chain();  // z < u with u·u = z

// Every valid fixture above, smallest first.
std::vector<FinOrderedMagma> all();
FinOrderedMagma by_name(const std::string& name);

}  // namespace qlab::fixtures
