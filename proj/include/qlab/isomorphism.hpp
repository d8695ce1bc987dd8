#pragma once

#include <optional>

#include "qlab/magma.hpp"
#include "qlab/magma_ops.hpp"

namespace qlab {

// f with a <= b iff f(a) <= f(b) and f(ab) = f(a)f(b); nullopt if none.
std::optional<SelfMap> find_isomorphism(const FinOrderedMagma& a, const FinOrderedMagma& b);

bool is_isomorphism(const FinOrderedMagma& a, const FinOrderedMagma& b, const SelfMap& f);

}  // namespace qlab
