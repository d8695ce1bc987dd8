#include "qlab/cli.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <functional>

#include <CLI11.hpp>

#include "qlab/classify.hpp"
#include "qlab/closure_calculus.hpp"
#include "qlab/dedekind.hpp"
#include "qlab/error.hpp"
#include "qlab/io.hpp"
#include "qlab/limits.hpp"
#include "qlab/moore.hpp"
#include "qlab/nucleus_lattice.hpp"
#include "qlab/representation.hpp"

namespace qlab {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string map_text(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

NucleusMap nucleus_arg(const FinOrderedMagma& m, const std::string& arg) {
  auto star = NucleusMap::try_make(m, parse_map(m, map_text(arg)));
  if (!star) fail(Errc::invalid_input, "map is not a closure operation on " + m.name());
  return *star;
}

DivisorialMethod method_of(const std::string& s) {
  if (s == "auto") return DivisorialMethod::automatic;
  if (s == "lin") return DivisorialMethod::lin;
  if (s == "two-sided") return DivisorialMethod::two_sided;
  if (s == "cyclic") return DivisorialMethod::cyclic;
  if (s == "semi-u") return DivisorialMethod::semi_u;
  fail(Errc::invalid_input, "unknown method " + s);
}

class Driver {
 public:
  explicit Driver(std::ostream& out) : out_(out) {}

  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  void nucleus_line(const FinOrderedMagma& m, const NucleusMap& n) {
    out_ << set_literal(m, n.fixed()) << "  " << map_literal(m, n.map()) << "  " << kind_name(n.kind()) << "\n";
  }

  void nucleus_out(const FinOrderedMagma& m, const NucleusMap& n) {
    if (json) emit(nucleus_json(m, n));
    else nucleus_line(m, n);
  }

  void nucleus_list(const FinOrderedMagma& m, const std::vector<NucleusMap>& v) {
    if (json) {
      Json a = Json::array();
      for (const auto& n : v) a.push_back(nucleus_json(m, n));
      emit(a);
    } else {
      for (const auto& n : v) nucleus_line(m, n);
    }
  }

  void classify_cmd(const std::string& path, bool literal) {
    auto m = read_structure(path);
    auto c = classify(m, {.literal = literal, .strict = false});
    auto violations = implication_violations(c);
    if (json) {
      Json j;
      j["name"] = m.name();
      j["size"] = m.size();
      Json flags = Json::object();
      for (auto& [k, v] : c.entries()) flags[k] = v;
      j["flags"] = flags;
      if (c.literal) j["literal"] = literal_json(m, *c.literal);
      j["violations"] = violations;
      emit(j);
      return;
    }
    out_ << m.name() << " (" << m.size() << " elements)\n";
    for (auto& [k, v] : c.entries()) out_ << "  " << k << ": " << yes_no(v) << "\n";
    if (c.literal) {
      out_ << "literal\n";
      for (auto& [k, v] : literal_json(m, *c.literal).items())
        out_ << "  " << k << ": " << (v.is_boolean() ? yes_no(v.get<bool>()) : v.is_null() ? "unknown" : v.dump()) << "\n";
    }
    for (const auto& v : violations) out_ << "violated: " << v << "\n";
  }

  Json literal_json(const FinOrderedMagma& m, const LiteralFlags& l) {
    Json j = Json::object();
    auto put = [&](const char* k, const std::optional<bool>& v) { j[k] = v ? Json(*v) : Json(nullptr); };
    put("s", l.s);
    put("ns", l.ns);
    put("d", l.d);
    put("bc", l.bc);
    put("p", l.p);
    put("np", l.np);
    put("sp", l.sp);
    put("ps", l.ps);
    put("ms", l.ms);
    put("t", l.t);
    put("r", l.r);
    put("nr", l.nr);
    if (l.compacts) j["compacts"] = set_literal(m, *l.compacts);
    else j["compacts"] = nullptr;
    return j;
  }

  void check_map_cmd(const std::string& path, const std::string& map) {
    auto m = read_structure(path);
    auto r = check_map(m, parse_map(m, map_text(map)));
    const auto& b = r.battery;
    std::vector<std::pair<std::string, std::string>> rows = {
        {"expansive", yes_no(r.expansive)},
        {"monotone", yes_no(r.monotone)},
        {"idempotent", yes_no(r.idempotent)},
        {"preclosure", yes_no(r.is_preclosure)},
        {"closure", yes_no(r.is_closure)},
        {"nucleus", yes_no(r.is_nucleus)},
        {"strict_nucleus", yes_no(r.is_strict_nucleus)},
        {"closure_nucleus", std::string(holds_name(b.closure_nucleus))},
        {"closure_one_sided", std::string(holds_name(b.closure_one_sided))},
        {"closure_star_product", std::string(holds_name(b.closure_star_product))},
        {"closure_star_assoc", std::string(holds_name(b.closure_star_assoc))},
        {"map_nucleus", std::string(holds_name(b.map_nucleus))},
        {"map_adjoint", std::string(holds_name(b.map_adjoint))},
        {"map_expansive_product", std::string(holds_name(b.map_expansive_product))},
        {"map_residual_left", std::string(holds_name(b.map_residual_left))},
        {"map_residual_right", std::string(holds_name(b.map_residual_right))},
    };
    if (json) {
      Json j = Json::object();
      for (auto& [k, v] : rows) j[k] = v == "yes" || v == "true" ? Json(true) : v == "no" || v == "false" ? Json(false) : Json(v);
      emit(j);
    } else {
      for (auto& [k, v] : rows) out_ << k << ": " << v << "\n";
    }
  }

  void enumerate_cmd(const std::string& what, const std::string& mode, const std::string& path, bool dot) {
    auto m = read_structure(path);
    if (mode == "hasse") {
      auto lat = nucleus_lattice(m);
      if (dot) {
        out_ << "digraph \"N(" << m.name() << ")\" {\n  rankdir=BT;\n";
        for (std::size_t i = 0; i < lat.nuclei.size(); ++i)
          out_ << "  n" << i << " [label=\"" << set_literal(m, lat.nuclei[i].fixed()) << "\"];\n";
        for (auto [a, b] : lat.hasse) out_ << "  n" << a << " -> n" << b << ";\n";
        out_ << "}\n";
      } else if (json) {
        Json j;
        j["nuclei"] = Json::array();
        for (const auto& n : lat.nuclei) j["nuclei"].push_back(nucleus_json(m, n));
        j["hasse"] = lat.hasse;
        emit(j);
      } else {
        for (std::size_t i = 0; i < lat.nuclei.size(); ++i) {
          out_ << i << ": ";
          nucleus_line(m, lat.nuclei[i]);
        }
        for (auto [a, b] : lat.hasse) out_ << a << " < " << b << "\n";
      }
      return;
    }
    auto v = what == "closures" ? enumerate_closures(m) : enumerate_nuclei(m);
    if (mode == "count") out_ << v.size() << "\n";
    else nucleus_list(m, v);
  }

  void divisorial_cmd(const std::string& path, const std::vector<std::string>& elems, const std::string& method,
                      const std::string& map) {
    auto m = read_structure(path);
    if (!map.empty()) {
      nucleus_out(m, reconstruct(m, nucleus_arg(m, map)));
      return;
    }
    if (elems.size() == 1) {
      nucleus_out(m, divisorial(m, m.poset().index_of(elems[0]), method_of(method)));
      return;
    }
    ElemSet s;
    for (const auto& e : elems) s.insert(m.poset().index_of(e));
    nucleus_out(m, divisorial_set(m, s));
  }

  void simple_cmd(const std::string& path) {
    auto m = read_structure(path);
    auto r = is_simple(m);
    if (json) {
      Json j;
      j["simple"] = r.simple;
      j["witness"] = r.witness ? nucleus_json(m, *r.witness) : Json(nullptr);
      Json checked = Json::array();
      for (Elem a : r.checked) checked.push_back(m.label(a));
      j["checked"] = checked;
      emit(j);
      return;
    }
    out_ << "simple: " << yes_no(r.simple) << "\n";
    if (r.witness) {
      out_ << "witness: ";
      nucleus_line(m, *r.witness);
    }
  }

  void finitary_cmd(const std::string& path, const std::string& map, const std::string& t) {
    auto m = read_structure(path);
    if (!t.empty()) nucleus_out(m, t_of(m, m.poset().index_of(t)));
    else nucleus_out(m, finitary_part(m, nucleus_arg(m, map)));
  }

  void stable_cmd(const std::string& path, const std::string& map) {
    auto m = read_structure(path);
    auto star = nucleus_arg(m, map);
    auto core = stable_core(m, star);
    auto w = star_w(m, star);
    auto c = stable_conditions(m, star);
    auto gv = gv_elements(m, star);
    if (json) {
      Json j;
      j["stable"] = c.definition;
      j["meet_one_residual"] = c.meet_one_residual;
      j["residual_meet_one"] = c.residual_meet_one;
      j["equals_core"] = c.equals_core;
      Json g = Json::array();
      for (Elem z : gv) g.push_back(m.label(z));
      j["gv"] = g;
      j["core"] = nucleus_json(m, core);
      j["w"] = nucleus_json(m, w);
      emit(j);
      return;
    }
    out_ << "stable: " << yes_no(c.definition) << "\n";
    out_ << "meet_one_residual: " << yes_no(c.meet_one_residual) << "\n";
    out_ << "residual_meet_one: " << yes_no(c.residual_meet_one) << "\n";
    out_ << "equals_core: " << yes_no(c.equals_core) << "\n";
    out_ << "gv: " << set_literal(m, gv) << "\n";
    out_ << "core: ";
    nucleus_line(m, core);
    out_ << "w: ";
    nucleus_line(m, w);
  }

  void idl_cmd(const std::string& path, bool dot) {
    auto idl = ideal_completion(read_structure(path));
    if (dot) out_ << hasse_dot(idl.structure);
    else if (json) emit(structure_to_json(idl.structure));
    else
      for (std::size_t i = 0; i < idl.ideals.size(); ++i)
        out_ << idl.structure.label(i) << " = " << set_literal(idl.base, idl.ideals[i]) << "\n";
  }

  void compacts_cmd(const std::string& path) {
    auto m = read_structure(path);
    auto k = compacts(m.poset());
    if (json) {
      Json a = Json::array();
      for (Elem x : k) a.push_back(m.label(x));
      emit(a);
    } else {
      out_ << set_literal(m, k) << "\n";
    }
  }

  void roundtrip_cmd(const std::string& path) {
    auto m = read_structure(path);
    auto c = classify(m);
    Json j = Json::object();
    if (!c.ms && !(c.np && c.precoherent))
      fail(Errc::hypothesis_not_met, m.name() + " is neither a multiplicative semilattice nor a precoherent near prequantale");
    if (c.ms) {
      auto u = unit_iso(m);
      j["unit"] = map_literal_between(u);
    }
    if (c.np && c.precoherent) {
      auto e = counit_iso(m);
      j["counit"] = map_literal_between(e);
    }
    if (json) {
      emit(j);
      return;
    }
    for (auto& [k, v] : j.items()) out_ << k << ": ok  " << v.get<std::string>() << "\n";
  }

  static std::string map_literal_between(const MagmaMorphism& f) {
    std::string s;
    for (Elem x = 0; x < f.source.size(); ++x)
      s += (x ? "," : "") + f.source.label(x) + ":" + f.target.label(f.map[x]);
    return s;
  }

  static MagmaTable base_magma(const std::string& path, std::size_t cyclic) {
    if (!path.empty()) return read_magma(path);
    if (cyclic == 0) fail(Errc::invalid_input, "give a base magma file or --cyclic n");
    return cyclic_group(cyclic);
  }

  void powerset_cmd(const std::string& path, std::size_t cyclic, bool zero, bool nonempty, bool dot) {
    auto m = powerset_structure(base_magma(path, cyclic), zero, nonempty);
    if (dot) out_ << hasse_dot(m);
    else emit(structure_to_json(m));
  }

  void system_cmd(const std::string& path, std::size_t cyclic, const std::string& map) {
    auto p = powerset_structure(base_magma(path, cyclic), true, false);
    auto r = system_predicates(p, parse_map(p, map_text(map)));
    std::vector<std::pair<const char*, bool>> rows = {
        {"nucleus", r.is_nucleus},
        {"module_system", r.is_module_system},
        {"weak_ideal_system", r.is_weak_ideal_system},
        {"ideal_system", r.is_ideal_system},
        {"module_by_definition", r.module_by_definition},
        {"weak_ideal_by_definition", r.weak_ideal_by_definition},
        {"ideal_by_definition", r.ideal_by_definition},
    };
    if (json) {
      Json j = Json::object();
      for (auto& [k, v] : rows) j[k] = v;
      emit(j);
    } else {
      for (auto& [k, v] : rows) out_ << k << ": " << yes_no(v) << "\n";
    }
  }

  void sstar_cmd(int n, bool dot) {
    auto r = enumerate_sstar(n);
    if (json) {
      Json j;
      j["count"] = r.ops.size();
      j["ops"] = Json::array();
      for (std::size_t i = 0; i < r.ops.size(); ++i)
        j["ops"].push_back({{"name", r.names[i]}, {"family", Json::parse(family_string(r.ops[i].family))}});
      j["hasse"] = r.hasse;
      emit(j);
      return;
    }
    out_ << r.ops.size() << "\n";
    if (dot) {
      out_ << sstar_dot(r);
      return;
    }
    for (std::size_t i = 0; i < r.ops.size(); ++i)
      out_ << r.names[i] << "  " << family_string(r.ops[i].family) << "\n";
  }

  void apply_cmd(int n, const std::string& op, const std::string& elem) {
    auto x = parse_dedekind(elem);
    if (x.n() != n) fail(Errc::dimension_mismatch, "element has " + std::to_string(x.n()) + " components, expected " + std::to_string(n));
    auto star = parse_op(n, op);
    auto y = star(x);
    if (json) emit(Json{{"op", op_name(star)}, {"input", x.str()}, {"output", y.str()}});
    else out_ << y.str() << "\n";
  }

  // Probes every operation for n primes; returns the failures found.
  std::size_t verify_cmd(int n, std::size_t samples, std::uint64_t seed) {
    if (n < 1 || n > 4) fail(Errc::size_limit_exceeded, "dedekind verify enumerates all operations, n <= 4");
    const auto fams = enumerate_moore(n);
    const auto xs = sample_dedekind(n, samples, seed);
    auto ys = sample_dedekind(n, samples, seed ^ 0x9e3779b97f4a7c15ull);
    for (std::size_t i = 1; i < ys.size(); i += 2) {
      std::array<DedekindElem, 2> pair{xs[i], ys[i]};
      ys[i] = dsup(pair);
    }
    DedekindBackend b(n);
    std::vector<std::string> failures;
    std::vector<DedekindSemistar> ops;
    for (const auto& f : fams) {
      DedekindSemistar op{f};
      ops.push_back(op);
      if (auto bad = probe_nucleus_pairs(b, op, std::span<const DedekindElem>(xs), std::span<const DedekindElem>(ys)))
        failures.push_back(family_string(f) + ": " + bad->property + " at " + bad->detail);
      if (!(left_inverse(op) == f)) failures.push_back(family_string(f) + ": left inverse");
    }
    const std::size_t checks = std::min<std::size_t>(32, xs.size());
    std::vector<std::vector<DedekindElem>> images;
    for (const auto& op : ops) {
      images.emplace_back();
      for (std::size_t i = 0; i < checks; ++i) images.back().push_back(op(xs[i]));
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = 0; j < ops.size(); ++j) {
        const auto& a = ops[i];
        const auto& c = ops[j];
        ++pairs;
        const bool reflects = (c.family.members & ~a.family.members) == 0;
        const bool leq = op_leq(a, c);
        if (leq != reflects) failures.push_back(op_name(a) + " vs " + op_name(c) + ": order");
        if (leq) {
          for (std::size_t k = 0; k < checks; ++k)
            if (!dleq(images[i][k], images[j][k])) {
              failures.push_back(op_name(a) + " vs " + op_name(c) + ": sampled order at " + xs[k].str());
              break;
            }
        } else {
          auto w = order_witness(a, c);
          if (!w || dleq(a(*w), c(*w))) failures.push_back(op_name(a) + " vs " + op_name(c) + ": witness");
        }
      }
    if (json) {
      emit(Json{{"primes", n}, {"operations", ops.size()}, {"samples", samples}, {"pairs", pairs}, {"failures", failures}});
    } else {
      out_ << "operations: " << ops.size() << "\nsamples: " << samples << "\norder pairs: " << pairs << "\n";
      for (const auto& f : failures) out_ << "FAIL " << f << "\n";
      out_ << (failures.empty() ? "ok" : "failed") << "\n";
    }
    return failures.size();
  }

  void moore_count_cmd(int n, unsigned threads) { out_ << count_moore(n, threads) << "\n"; }

  void moore_enum_cmd(int n) {
    auto v = enumerate_moore(n);
    if (json) {
      Json a = Json::array();
      for (const auto& f : v) a.push_back(Json::parse(family_string(f)));
      emit(a);
    } else {
      for (const auto& f : v) out_ << family_string(f) << "\n";
    }
  }

  bool json = false;

 private:
  std::ostream& out_;
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qlab: nuclei on finite ordered magmas", "qlab"};
  app.require_subcommand(1, 1);
  Driver d(out);
  bool json = false, dot = false, literal = false, zero = false, nonempty = false;
  std::string limit, path, map, method = "auto", t, op, elem;
  std::vector<std::string> elems;
  std::size_t cyclic = 0, samples = 10000;
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
  int n = 0;
  std::function<int()> action;

  app.add_option("--limit", limit, "size bounds, e.g. 16 or subset=22,closures=16");
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "JSON output"); };
  auto add_dot = [&](CLI::App* s) { s->add_flag("--dot", dot, "DOT output"); };
  auto add_path = [&](CLI::App* s) { s->add_option("structure", path, "structure JSON file")->required(); };
  auto done = [](std::function<void()> f) {
    return [f] {
      f();
      return 0;
    };
  };

  auto* classify_c = app.add_subcommand("classify", "class membership flags");
  add_path(classify_c);
  add_json(classify_c);
  classify_c->add_flag("--literal", literal, "also decide flags from their subset definitions");
  classify_c->callback([&] { action = done([&] { d.classify_cmd(path, literal); }); });

  auto* check = app.add_subcommand("check-map", "closure and nucleus checks for a self-map");
  add_path(check);
  check->add_option("map", map, "x:y,... or a JSON map file")->required();
  add_json(check);
  check->callback([&] { action = done([&] { d.check_map_cmd(path, map); }); });

  for (const char* what : {"closures", "nuclei"}) {
    auto* s = app.add_subcommand(what, std::string("enumerate ") + what);
    s->require_subcommand(1, 1);
    std::vector<std::string> modes = {"list", "count"};
    if (std::string(what) == "nuclei") modes.push_back("hasse");
    for (const auto& mode : modes) {
      auto* sub = s->add_subcommand(mode);
      add_path(sub);
      add_json(sub);
      if (mode == "hasse") add_dot(sub);
      sub->callback([&, what = std::string(what), mode] { action = done([&, what, mode] { d.enumerate_cmd(what, mode, path, dot); }); });
    }
  }

  auto* div = app.add_subcommand("divisorial", "largest nucleus fixing the given elements");
  add_path(div);
  div->add_option("elements", elems, "element labels");
  div->add_option("--method", method, "auto, lin, two-sided, cyclic or semi-u")
      ->check(CLI::IsMember({"auto", "lin", "two-sided", "cyclic", "semi-u"}));
  div->add_option("--reconstruct", map, "rebuild this nucleus from divisorial closures");
  add_json(div);
  div->callback([&] {
    if (elems.empty() && map.empty()) throw CLI::ValidationError("divisorial", "give elements or --reconstruct");
    action = done([&] { d.divisorial_cmd(path, elems, method, map); });
  });

  auto* simple = app.add_subcommand("simple", "whether d and e are the only nuclei");
  add_path(simple);
  add_json(simple);
  simple->callback([&] { action = done([&] { d.simple_cmd(path); }); });

  auto* fin = app.add_subcommand("finitary", "finitary part of a nucleus, or t(a)");
  add_path(fin);
  auto* fin_map = fin->add_option("map", map, "nucleus as x:y,... or a JSON map file");
  fin->add_option("--t", t, "print t of this element instead")->excludes(fin_map);
  add_json(fin);
  fin->callback([&] {
    if (map.empty() && t.empty()) throw CLI::ValidationError("finitary", "give a nucleus or --t");
    action = done([&] { d.finitary_cmd(path, map, t); });
  });

  auto* stable = app.add_subcommand("stable", "stable core and stability conditions");
  add_path(stable);
  stable->add_option("map", map, "nucleus as x:y,... or a JSON map file")->required();
  add_json(stable);
  stable->callback([&] { action = done([&] { d.stable_cmd(path, map); }); });

  auto* idl = app.add_subcommand("idl", "ideal completion");
  add_path(idl);
  add_json(idl);
  add_dot(idl);
  idl->callback([&] { action = done([&] { d.idl_cmd(path, dot); }); });

  auto* comp = app.add_subcommand("compacts", "compact elements");
  add_path(comp);
  add_json(comp);
  comp->callback([&] { action = done([&] { d.compacts_cmd(path); }); });

  auto* round = app.add_subcommand("roundtrip", "unit and counit isomorphisms");
  add_path(round);
  add_json(round);
  round->callback([&] { action = done([&] { d.roundtrip_cmd(path); }); });

  auto* pw = app.add_subcommand("powerset", "power set structure of a magma");
  auto* pw_file = pw->add_option("magma", path, "magma JSON file");
  pw->add_option("--cyclic", cyclic, "use the cyclic group of this order")->excludes(pw_file);
  pw->add_flag("--zero", zero, "adjoin an absorbing zero");
  pw->add_flag("--nonempty", nonempty, "drop the empty set");
  add_json(pw);
  add_dot(pw);
  pw->callback([&] { action = done([&] { d.powerset_cmd(path, cyclic, zero, nonempty, dot); }); });

  auto* sys = app.add_subcommand("system-check", "ideal, weak ideal and module system predicates");
  auto* sys_file = sys->add_option("--magma", path, "magma JSON file");
  sys->add_option("--cyclic", cyclic, "use the cyclic group of this order")->excludes(sys_file);
  sys->add_option("map", map, "map on 2^(M_0) as x:y,... or a JSON map file")->required();
  add_json(sys);
  sys->callback([&] { action = done([&] { d.system_cmd(path, cyclic, map); }); });

  auto* ded = app.add_subcommand("dedekind", "semistar operations on a semilocal Dedekind domain");
  ded->require_subcommand(1, 1);
  auto* sstar = ded->add_subcommand("sstar", "all operations and their order");
  sstar->add_option("--primes", n, "number of maximal ideals")->required()->check(CLI::Range(1, 6));
  add_json(sstar);
  add_dot(sstar);
  sstar->callback([&] { action = done([&] { d.sstar_cmd(n, dot); }); });
  auto* apply = ded->add_subcommand("apply", "apply one operation");
  apply->add_option("--primes", n, "number of maximal ideals")->required()->check(CLI::Range(1, 6));
  apply->add_option("--op", op, "d, e, v, star<i>, star<i>^v, v(J) or a family literal")->required();
  apply->add_option("--elem", elem, "exponents such as 1,-2 with F for the full component")->required();
  add_json(apply);
  apply->callback([&] { action = done([&] { d.apply_cmd(n, op, elem); }); });
  auto* verify = ded->add_subcommand("verify", "probe every operation on sampled elements");
  verify->add_option("--primes", n, "number of maximal ideals")->required()->check(CLI::Range(1, 6));
  verify->add_option("--samples", samples, "sampled pairs per operation");
  verify->add_option("--seed", seed, "sampling seed");
  add_json(verify);
  verify->callback([&] { action = [&] { return d.verify_cmd(n, samples, seed) == 0 ? 0 : 2; }; });

  auto* moore = app.add_subcommand("moore", "Moore families on a finite set");
  moore->require_subcommand(1, 1);
  auto* count = moore->add_subcommand("count", "number of Moore families");
  count->add_option("n", n, "ground set size")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--threads", threads, "worker threads, 0 for all cores");
  count->callback([&] { action = done([&] { d.moore_count_cmd(n, threads); }); });
  auto* en = moore->add_subcommand("enum", "list Moore families");
  en->add_option("n", n, "ground set size")->required()->check(CLI::NonNegativeNumber);
  add_json(en);
  en->callback([&] { action = done([&] { d.moore_enum_cmd(n); }); });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << errc_name(Errc::invalid_input) << "\n" << e.what() << "\n";
    return exit_code(Errc::invalid_input);
  }

  struct Restore {
    Limits saved = limits();
    ~Restore() { set_limits(saved); }
  } restore;
  try {
    if (!limit.empty()) set_limits(parse_limits(limit, limits()));
    d.json = json;
    return action ? action() : 0;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << "\n" << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace qlab
