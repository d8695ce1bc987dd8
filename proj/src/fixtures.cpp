#include "qlab/fixtures.hpp"

#include "qlab/error.hpp"

namespace qlab::fixtures {

namespace {

using Rows = std::vector<std::vector<std::string>>;

FinOrderedMagma chain(std::string name, std::vector<std::string> labels, Rows mul) {
  StructureSpec s;
  s.name = std::move(name);
  s.elements = labels;
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) s.leq.emplace_back(labels[i], labels[i + 1]);
  s.mul = std::move(mul);
  return validate_structure(s);
}

}  // namespace

FinOrderedMagma chain3q() {
  return chain("CHAIN3Q", {"z", "m", "u"}, {{"z", "z", "z"}, {"z", "z", "m"}, {"z", "m", "u"}});
}

FinOrderedMagma bool2() {
  StructureSpec s;
  s.name = "BOOL2";
  s.elements = {"0", "a", "b", "ab"};
  s.leq = {{"0", "a"}, {"0", "b"}, {"a", "ab"}, {"b", "ab"}};
  s.mul = {{"0", "0", "0", "0"}, {"0", "a", "0", "a"}, {"0", "0", "b", "b"}, {"0", "a", "b", "ab"}};
  return validate_structure(s);
}

FinOrderedMagma diamond() {
  StructureSpec s;
  s.name = "DIAMOND";
  s.elements = {"bot", "left", "right", "top"};
  s.leq = {{"bot", "left"}, {"bot", "right"}, {"left", "top"}, {"right", "top"}};
  s.mul = {{"bot", "bot", "bot", "bot"},
           {"bot", "left", "bot", "left"},
           {"bot", "bot", "right", "right"},
           {"bot", "left", "right", "top"}};
  return validate_structure(s);
}

FinOrderedMagma one() { return chain("ONE", {"*"}, {{"*"}}); }

FinOrderedMagma two() { return chain("TWO", {"0", "1"}, {{"0", "0"}, {"0", "1"}}); }

FinOrderedMagma chain3min() {
  return chain("CHAIN3MIN", {"0", "h", "1"}, {{"0", "0", "0"}, {"0", "h", "h"}, {"0", "h", "1"}});
}

FinOrderedMagma chain4max() {
  return chain("CHAIN4MAX", {"z", "u", "s", "t"},
               {{"z", "z", "z", "z"}, {"z", "u", "s", "t"}, {"z", "s", "s", "t"}, {"z", "t", "t", "t"}});
}

FinOrderedMagma powerset_c2() { return powerset_structure(cyclic_group(2), false, false); }

MagmaTable nonassoc_magma() { return MagmaTable{"N", {"a", "b"}, {1, 1, 0, 0}}; }

FinOrderedMagma powerset_nonassoc() { return powerset_structure(nonassoc_magma(), false, false); }

FinOrderedMagma powerset_trivial_zero() { return powerset_structure(cyclic_group(1), true, false); }

StructureSpec nonmonotone_chain() {
  StructureSpec s;
  s.name = "NONMONO";
  s.elements = {"z", "u"};
  s.leq = {{"z", "u"}};
  s.mul = {{"z", "u"}, {"u", "z"}};
  return s;
}

std::vector<FinOrderedMagma> all() {
  return {one(),       two(),         chain3q(),     chain3min(),          bool2(),
          diamond(),   chain4max(),   powerset_c2(), powerset_trivial_zero(), powerset_nonassoc()};
}

FinOrderedMagma by_name(const std::string& name) {
  for (auto& m : all())
    if (m.name() == name) return m;
  fail(Errc::invalid_input, "unknown fixture " + name);
}

}  // namespace qlab::fixtures
