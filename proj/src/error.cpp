#include "qlab/error.hpp"

namespace qlab {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::cycle_in_order: return "CycleInOrder";
    case Errc::non_monotone_mul: return "NonMonotoneMul";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::size_limit_exceeded: return "SizeLimitExceeded";
    case Errc::hypothesis_not_met: return "HypothesisNotMet";
    case Errc::restriction_mismatch: return "RestrictionMismatch";
    case Errc::not_a_powerset_structure: return "NotAPowersetStructure";
    case Errc::not_a_morphism: return "NotAMorphism";
    case Errc::reconstruction_mismatch: return "ReconstructionMismatch";
    case Errc::stability_lost: return "StabilityLost";
    case Errc::isomorphism_failure: return "IsomorphismFailure";
    case Errc::no_fixpoint: return "NoFixpoint";
  }
  return "Unknown";
}

int exit_code(Errc c) {
  switch (c) {
    case Errc::size_limit_exceeded:
      return 3;
    case Errc::hypothesis_not_met:
    case Errc::restriction_mismatch:
    case Errc::reconstruction_mismatch:
    case Errc::stability_lost:
    case Errc::isomorphism_failure:
    case Errc::no_fixpoint:
      return 2;
    default:
      return 1;
  }
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qlab
