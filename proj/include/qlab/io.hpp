#pragma once

#include <string>

#include <json.hpp>

#include "qlab/magma.hpp"
#include "qlab/magma_ops.hpp"
#include "qlab/nucleus.hpp"
#include "qlab/powerset.hpp"

namespace qlab {

using Json = nlohmann::ordered_json;

StructureSpec spec_from_json(const Json& j);
Json structure_to_json(const FinOrderedMagma& m);
FinOrderedMagma parse_structure(const std::string& text);
FinOrderedMagma read_structure(const std::string& path);

// {"name", "elements", "mul"} without an order.
MagmaTable magma_from_json(const Json& j);
MagmaTable read_magma(const std::string& path);

std::string read_file(const std::string& path);

// "x:y,..." naming every element, or JSON {"map": {label: label}}.
SelfMap parse_map(const FinOrderedMagma& m, const std::string& text);
std::string map_literal(const FinOrderedMagma& m, const SelfMap& f);
std::string set_literal(const FinOrderedMagma& m, ElemSet s);
Json nucleus_json(const FinOrderedMagma& m, const NucleusMap& star);

// Hasse diagram of the order, bottom to top.
std::string hasse_dot(const FinOrderedMagma& m);

}  // namespace qlab
