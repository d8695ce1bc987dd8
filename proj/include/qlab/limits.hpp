#pragma once

#include <cstddef>
#include <string_view>

namespace qlab {

struct Limits {
  std::size_t subset_quantification = 20;  // 2^n scans (literal checks, ideals)
  std::size_t closure_enumeration = 14;
  std::size_t powerset_base = 4;
  std::size_t lin_maps = 1u << 16;
  std::size_t moore_materialize = 4;
};

// Process-wide limits. First use reads QLAB_LIMIT, which is either a single
// integer applied to every structure-size bound or a list such as
// "subset=22,closures=16,powerset=5,lin=100000,moore=4".
const Limits& limits();
void set_limits(const Limits& l);
Limits parse_limits(std::string_view text, Limits base);

}  // namespace qlab
