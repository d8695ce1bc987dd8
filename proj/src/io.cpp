#include "qlab/io.hpp"

#include <fstream>
#include <sstream>

#include "qlab/error.hpp"

namespace qlab {

namespace {

std::string get_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(Errc::invalid_input, std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(Errc::invalid_input, std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(get_string(e, what));
  return out;
}

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(Errc::invalid_input, where + ": " + e.what());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\n\r") - b + 1);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::invalid_input, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructureSpec spec_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::invalid_input, "structure must be a JSON object");
  StructureSpec s;
  if (j.contains("name")) s.name = get_string(j["name"], "name");
  if (!j.contains("elements") || !j.contains("mul")) fail(Errc::invalid_input, "structure needs elements and mul");
  s.elements = string_list(j["elements"], "elements");
  if (j.contains("leq")) {
    if (!j["leq"].is_array()) fail(Errc::invalid_input, "leq must be a list of pairs");
    for (const auto& p : j["leq"]) {
      auto pair = string_list(p, "leq pair");
      if (pair.size() != 2) fail(Errc::invalid_input, "leq entries must be pairs");
      s.leq.emplace_back(pair[0], pair[1]);
    }
  }
  if (!j["mul"].is_array()) fail(Errc::invalid_input, "mul must be a list of rows");
  for (const auto& row : j["mul"]) s.mul.push_back(string_list(row, "mul row"));
  if (j.contains("identity")) s.identity = get_string(j["identity"], "identity");
  if (j.contains("annihilator")) s.annihilator = get_string(j["annihilator"], "annihilator");
  return s;
}

Json structure_to_json(const FinOrderedMagma& m) {
  Json j;
  j["name"] = m.name();
  j["elements"] = m.poset().labels();
  Json leq = Json::array();
  for (auto [a, b] : m.poset().covers()) leq.push_back({m.label(a), m.label(b)});
  j["leq"] = leq;
  Json mul = Json::array();
  for (Elem x = 0; x < m.size(); ++x) {
    Json row = Json::array();
    for (Elem y = 0; y < m.size(); ++y) row.push_back(m.label(m.mul(x, y)));
    mul.push_back(row);
  }
  j["mul"] = mul;
  if (auto e = m.identity()) j["identity"] = m.label(*e);
  if (auto z = m.annihilator()) j["annihilator"] = m.label(*z);
  return j;
}

FinOrderedMagma parse_structure(const std::string& text) {
  return validate_structure(spec_from_json(parse_json(text, "structure")));
}

FinOrderedMagma read_structure(const std::string& path) {
  return validate_structure(spec_from_json(parse_json(read_file(path), path)));
}

MagmaTable magma_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("mul"))
    fail(Errc::invalid_input, "magma needs elements and mul");
  MagmaTable t;
  if (j.contains("name")) t.name = get_string(j["name"], "name");
  t.labels = string_list(j["elements"], "elements");
  if (t.labels.empty()) fail(Errc::invalid_input, "magma has no elements");
  auto index = [&](const std::string& l) -> Elem {
    for (Elem i = 0; i < t.labels.size(); ++i)
      if (t.labels[i] == l) return i;
    fail(Errc::unknown_label, "unknown label " + l);
  };
  if (!j["mul"].is_array() || j["mul"].size() != t.labels.size()) fail(Errc::invalid_input, "mul must be square");
  for (const auto& row : j["mul"]) {
    auto r = string_list(row, "mul row");
    if (r.size() != t.labels.size()) fail(Errc::invalid_input, "mul must be square");
    for (const auto& l : r) t.mul.push_back(index(l));
  }
  return t;
}

MagmaTable read_magma(const std::string& path) { return magma_from_json(parse_json(read_file(path), path)); }

SelfMap parse_map(const FinOrderedMagma& m, const std::string& text) {
  const auto& p = m.poset();
  std::vector<int> f(m.size(), -1);
  auto assign = [&](const std::string& from, const std::string& to) {
    Elem x = p.index_of(from);
    if (f[x] != -1) fail(Errc::invalid_input, "element " + from + " mapped twice");
    f[x] = static_cast<int>(p.index_of(to));
  };
  const std::string body = trim(text);
  const auto second = body.find_first_not_of(" \t\n\r", 1);
  if (body.starts_with("{") && second != std::string::npos && body[second] == '"') {
    auto j = parse_json(body, "map");
    if (!j.contains("map") || !j["map"].is_object()) fail(Errc::invalid_input, "map file needs a \"map\" object");
    for (auto& [k, v] : j["map"].items()) assign(k, get_string(v, "map value"));
  } else {
    std::vector<std::string> items{""};
    int depth = 0;
    for (char c : body) {
      if (c == '{') ++depth;
      if (c == '}') --depth;
      if (c == ',' && depth == 0) items.emplace_back();
      else items.back() += c;
    }
    for (const auto& item : items) {
      auto colon = item.find(':');
      if (colon == std::string::npos) fail(Errc::invalid_input, "map entries look like x:y, got " + item);
      assign(trim(item.substr(0, colon)), trim(item.substr(colon + 1)));
    }
  }
  SelfMap out(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    if (f[x] < 0) fail(Errc::invalid_input, "map leaves " + m.label(x) + " unassigned");
    out[x] = static_cast<Elem>(f[x]);
  }
  return out;
}

std::string map_literal(const FinOrderedMagma& m, const SelfMap& f) {
  std::string s;
  for (Elem x = 0; x < m.size(); ++x) s += (x ? "," : "") + m.label(x) + ":" + m.label(f[x]);
  return s;
}

std::string set_literal(const FinOrderedMagma& m, ElemSet s) {
  std::string out = "{";
  bool first = true;
  for (Elem x : s) {
    out += (first ? "" : ",") + m.label(x);
    first = false;
  }
  return out + "}";
}

Json nucleus_json(const FinOrderedMagma& m, const NucleusMap& star) {
  Json j;
  Json fixed = Json::array();
  for (Elem x : star.fixed()) fixed.push_back(m.label(x));
  j["fixed"] = fixed;
  Json map = Json::object();
  for (Elem x = 0; x < m.size(); ++x) map[m.label(x)] = m.label(star(x));
  j["map"] = map;
  j["kind"] = std::string(kind_name(star.kind()));
  return j;
}

std::string hasse_dot(const FinOrderedMagma& m) {
  std::string s = "digraph \"" + dot_escape(m.name()) + "\" {\n  rankdir=BT;\n";
  for (Elem x = 0; x < m.size(); ++x) s += "  n" + std::to_string(x) + " [label=\"" + dot_escape(m.label(x)) + "\"];\n";
  for (auto [a, b] : m.poset().covers()) s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

}  // namespace qlab
