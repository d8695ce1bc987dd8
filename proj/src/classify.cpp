#include "qlab/classify.hpp"

#include "qlab/error.hpp"
#include "qlab/limits.hpp"
#include "qlab/magma_ops.hpp"

namespace qlab {

namespace {

constexpr int kNone = -1;

struct Joins {
  std::size_t n;
  std::vector<int> table;
  int operator()(Elem a, Elem b) const { return table[a * n + b]; }
};

Joins joins_of(const FinPoset& p) {
  Joins j{p.size(), std::vector<int>(p.size() * p.size(), kNone)};
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b)
      if (auto s = p.sup(ElemSet{a, b})) j.table[a * j.n + b] = static_cast<int>(*s);
  return j;
}

bool binary_distributive(const FinOrderedMagma& m, const Joins& join) {
  const auto n = static_cast<Elem>(m.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      int j = join(x, y);
      if (j == kNone) continue;
      for (Elem a = 0; a < n; ++a) {
        if (join(m.mul(a, x), m.mul(a, y)) != static_cast<int>(m.mul(a, static_cast<Elem>(j)))) return false;
        if (join(m.mul(x, a), m.mul(y, a)) != static_cast<int>(m.mul(static_cast<Elem>(j), a))) return false;
      }
    }
  return true;
}

LiteralFlags literal_flags(const FinOrderedMagma& m) {
  const auto& p = m.poset();
  const std::size_t n = m.size();
  LiteralFlags lit;
  const auto bound = limits().subset_quantification;
  if (n > bound) return lit;

  const ElemSet::Mask total = ElemSet::Mask{1} << n;
  std::vector<int> sup(total);
  std::vector<char> directed(total);
  for (ElemSet::Mask x = 0; x < total; ++x) {
    auto s = p.sup(ElemSet(x));
    sup[x] = s ? static_cast<int>(*s) : kNone;
    directed[x] = p.is_directed(ElemSet(x));
  }
  bool s_all = true, ns_all = true, d_all = true, bc_all = true;
  for (ElemSet::Mask x = 0; x < total; ++x) {
    bool has = sup[x] != kNone;
    if (!has) s_all = false;
    if (x != 0 && !has) ns_all = false;
    if (directed[x] && !has) d_all = false;
    if (x != 0 && !p.upper_bounds(ElemSet(x)).empty() && !has) bc_all = false;
  }
  lit.s = s_all;
  lit.ns = ns_all;
  lit.d = d_all;
  lit.bc = bc_all;

  // Residual sets {z : zy <= x} and {z : yz <= x}.
  bool res_sup = true, nres_sup = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      ElemSet l, r;
      for (Elem z = 0; z < n; ++z) {
        if (m.leq(m.mul(z, y), x)) l.insert(z);
        if (m.leq(m.mul(y, z), x)) r.insert(z);
      }
      for (ElemSet w : {l, r}) {
        if (sup[w.mask()] == kNone) {
          res_sup = false;
          if (!w.empty()) nres_sup = false;
        }
      }
    }

  if (2 * n <= bound) {
    // (sup exists for X, Y) => sup(XY) exists and equals sup(X)sup(Y), for X, Y in the given class.
    auto distributes = [&](auto in_class) {
      for (ElemSet::Mask x = 0; x < total; ++x) {
        if (!in_class(x) || sup[x] == kNone) continue;
        for (ElemSet::Mask y = 0; y < total; ++y) {
          if (!in_class(y) || sup[y] == kNone) continue;
          auto xy = m.product(ElemSet(x), ElemSet(y)).mask();
          if (sup[xy] != static_cast<int>(m.mul(static_cast<Elem>(sup[x]), static_cast<Elem>(sup[y])))) return false;
        }
      }
      return true;
    };
    auto all = [](ElemSet::Mask) { return true; };
    auto nonempty = [](ElemSet::Mask x) { return x != 0; };
    auto is_directed = [&](ElemSet::Mask x) { return directed[x] != 0; };
    bool d_all_sets = distributes(all);
    bool d_nonempty = distributes(nonempty);
    lit.p = s_all && d_all_sets;
    lit.np = ns_all && d_nonempty;
    // finite-or-bounded nonempty sets: all nonempty sets here
    lit.sp = ns_all && d_nonempty;
    lit.ps = s_all && d_all_sets;
    lit.ms = ns_all && d_nonempty;
    lit.t = distributes(is_directed);
    lit.r = res_sup && d_all_sets;
    lit.nr = nres_sup && d_nonempty;
  }

  ElemSet k;
  for (Elem c = 0; c < n; ++c) {
    bool compact = true;
    for (ElemSet::Mask x = 0; x < total && compact; ++x) {
      if (!directed[x] || sup[x] == kNone || !p.leq(c, static_cast<Elem>(sup[x]))) continue;
      if ((p.up(c) & ElemSet(x)).empty()) compact = false;
    }
    if (compact) k.insert(c);
  }
  lit.compacts = k;
  return lit;
}

}  // namespace

std::vector<std::pair<std::string, bool>> StructureClass::entries() const {
  return {{"s", s},
          {"ns", ns},
          {"d", d},
          {"bc", bc},
          {"b", b},
          {"a", a},
          {"p", p},
          {"np", np},
          {"sp", sp},
          {"ps", ps},
          {"ms", ms},
          {"t", t},
          {"r", r},
          {"nr", nr},
          {"associative", associative},
          {"commutative", commutative},
          {"unital", unital},
          {"quantale", quantale},
          {"near_quantale", near_quantale},
          {"semiquantale", semiquantale},
          {"multiplicative_lattice", multiplicative_lattice},
          {"near_multiplicative_lattice", near_multiplicative_lattice},
          {"semimultiplicative_lattice", semimultiplicative_lattice},
          {"frame", frame},
          {"u_lattice", u_lattice},
          {"near_u_lattice", near_u_lattice},
          {"semi_u_lattice", semi_u_lattice},
          {"precoherent", precoherent},
          {"coherent", coherent}};
}

ElemSet compacts(const FinPoset& p) {
  p.require_masked();
  // Every finite directed set contains its supremum.
  return p.all();
}

ElemSet compacts_literal(const FinPoset& p) {
  const std::size_t n = p.size();
  if (n > limits().subset_quantification)
    fail(Errc::size_limit_exceeded, "literal compactness scan needs at most " +
                                        std::to_string(limits().subset_quantification) + " elements");
  ElemSet k;
  const ElemSet::Mask total = ElemSet::Mask{1} << n;
  for (Elem c = 0; c < n; ++c) {
    bool compact = true;
    for (ElemSet::Mask x = 1; x < total && compact; ++x) {
      ElemSet d(x);
      if (!p.is_directed(d)) continue;
      auto s = p.sup(d);
      if (!s || !p.leq(c, *s)) continue;
      if ((p.up(c) & d).empty()) compact = false;
    }
    if (compact) k.insert(c);
  }
  return k;
}

StructureClass classify(const FinOrderedMagma& m, ClassifyOptions opts) {
  const auto& p = m.poset();
  p.require_masked();
  const auto n = static_cast<Elem>(m.size());
  StructureClass c;
  auto join = joins_of(p);

  c.ns = true;
  c.bc = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (join(x, y) != kNone) continue;
      c.ns = false;
      if (!(p.up(x) & p.up(y)).empty()) c.bc = false;
    }
  c.s = c.ns && p.least().has_value();
  c.d = true;  // finite directed sets have a greatest element
  c.b = p.greatest().has_value();
  c.a = m.annihilator().has_value();
  const bool distrib = binary_distributive(m, join);
  c.ms = c.ns && distrib;
  c.ps = c.ms && c.a;
  c.np = c.ns && distrib;
  c.sp = c.ns && distrib;  // finite-or-bounded nonempty sets are all nonempty sets
  c.p = c.s && distrib && c.a;
  c.t = true;  // Scott continuity is monotonicity on a finite carrier
  c.r = is_residuated(m);
  c.nr = is_near_residuated(m);

  c.associative = m.associative();
  c.commutative = m.commutative();
  c.unital = m.unital();
  c.quantale = c.p && c.associative;
  c.near_quantale = c.np && c.associative;
  c.semiquantale = c.sp && c.associative;
  c.multiplicative_lattice = c.quantale && c.commutative && c.unital;
  c.near_multiplicative_lattice = c.near_quantale && c.commutative && c.unital;
  c.semimultiplicative_lattice = c.semiquantale && c.commutative && c.unital;

  c.frame = c.quantale && m.top() && m.identity() == m.top();
  for (Elem x = 0; x < n && c.frame; ++x)
    for (Elem y = 0; y < n && c.frame; ++y) c.frame = p.meet(x, y) == m.mul(x, y);

  c.units_sup_spanning = is_sup_spanning(m, units_and_inverses(m).units);
  c.u_lattice = c.s && c.units_sup_spanning;
  c.near_u_lattice = c.ns && c.units_sup_spanning;
  c.semi_u_lattice = c.bc && c.ns && c.units_sup_spanning;

  ElemSet k = compacts(p);
  bool algebraic = true;
  for (Elem x = 0; x < n && algebraic; ++x) algebraic = p.sup(k & p.down(x)) == x;
  c.precoherent = algebraic && m.closed_under_mul(k);
  c.coherent = c.precoherent && m.identity() && k.contains(*m.identity());

  if (opts.literal) {
    if (opts.strict && n > limits().subset_quantification)
      fail(Errc::size_limit_exceeded, "literal classification needs at most " +
                                          std::to_string(limits().subset_quantification) + " elements");
    c.literal = literal_flags(m);
  }
  return c;
}

std::vector<std::string> implication_violations(const StructureClass& c) {
  struct Imp {
    const char* name;
    bool from, to;
  };
  const Imp imps[] = {
      {"p=>np", c.p, c.np},   {"np=>sp", c.np, c.sp},   {"sp=>ms", c.sp, c.ms},  {"sp=>bc", c.sp, c.bc},
      {"sp=>t", c.sp, c.t},   {"p=>r", c.p, c.r},       {"r=>nr", c.r, c.nr},    {"nr=>t", c.nr, c.t},
      {"np=>nr", c.np, c.nr}, {"p=>s", c.p, c.s},       {"s=>ns", c.s, c.ns},    {"ns=>d", c.ns, c.d},
      {"ns=>bc", c.ns, c.bc}, {"ns=>b", c.ns, c.b},     {"s=>b", c.s, c.b},      {"p=>ps", c.p, c.ps},
      {"ps=>a", c.ps, c.a},   {"ps=>ms", c.ps, c.ms},   {"np=>ns", c.np, c.ns},  {"np=>t", c.np, c.t},
      {"p=>a", c.p, c.a},     {"np=>ms", c.np, c.ms},   {"p=>t", c.p, c.t},
      // complete and residuated; near sup-complete and near residuated
      {"p=>s&r", c.p, c.s && c.r}, {"s&r=>p", c.s && c.r, c.p}, {"np&a=>p", c.np && c.a, c.p},
      {"np=>ns&nr", c.np, c.ns && c.nr}, {"ns&nr=>np", c.ns && c.nr, c.np},
      {"quantale=>p", c.quantale, c.p}, {"ml=>quantale", c.multiplicative_lattice, c.quantale},
      {"frame=>ml", c.frame, c.multiplicative_lattice}, {"u_lattice=>p", c.u_lattice, c.p},
      {"near_u_lattice=>np", c.near_u_lattice, c.np}, {"semi_u_lattice=>sp", c.semi_u_lattice, c.sp},
      {"coherent=>precoherent", c.coherent, c.precoherent},
  };
  std::vector<std::string> out;
  for (const auto& i : imps)
    if (i.from && !i.to) out.emplace_back(i.name);
  return out;
}

}  // namespace qlab
