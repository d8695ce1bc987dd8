#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qlab {

enum class Errc {
  invalid_input,
  unknown_label,
  cycle_in_order,
  non_monotone_mul,
  dimension_mismatch,
  size_limit_exceeded,
  hypothesis_not_met,
  restriction_mismatch,
  not_a_powerset_structure,
  not_a_morphism,
  reconstruction_mismatch,
  stability_lost,
  isomorphism_failure,
  no_fixpoint,
};

std::string_view errc_name(Errc c);

// Process exit code for the CLI: 1 input, 2 property check, 3 size limit.
int exit_code(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace qlab
