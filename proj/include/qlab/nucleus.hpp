#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qlab/magma.hpp"
#include "qlab/magma_ops.hpp"

namespace qlab {

enum class MapKind { closure, nucleus, strict_nucleus };
std::string_view kind_name(MapKind k);

// A closure operation on a finite ordered magma, with its fixed set.
class NucleusMap {
 public:
  // Throws InvalidInput unless map is a closure operation on m.
  static NucleusMap make(const FinOrderedMagma& m, SelfMap map);
  static std::optional<NucleusMap> try_make(const FinOrderedMagma& m, SelfMap map);

  const SelfMap& map() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }
  ElemSet fixed() const { return fixed_; }
  MapKind kind() const { return kind_; }
  bool is_nucleus() const { return kind_ != MapKind::closure; }
  std::size_t size() const { return map_.size(); }

  friend bool operator==(const NucleusMap& a, const NucleusMap& b) { return a.map_ == b.map_; }

 private:
  SelfMap map_;
  ElemSet fixed_;
  MapKind kind_ = MapKind::closure;
};

NucleusMap identity_nucleus(const FinOrderedMagma& m);  // d
NucleusMap top_nucleus(const FinOrderedMagma& m);       // e, needs a top

bool pointwise_leq(const FinOrderedMagma& m, const SelfMap& a, const SelfMap& b);

enum class Holds : std::uint8_t { no, yes, not_applicable };
inline Holds holds(bool b) { return b ? Holds::yes : Holds::no; }
std::string_view holds_name(Holds h);

// Characterizations of nuclei, each evaluated on its own.
struct Battery {
  // closure ⋆: nucleus; xy⋆ <= (xy)⋆ and x⋆y <= (xy)⋆; (x⋆y⋆)⋆ = (xy)⋆; ⋆-multiplication associative (monoids)
  Holds closure_nucleus = Holds::no;
  Holds closure_one_sided = Holds::no;
  Holds closure_star_product = Holds::no;
  Holds closure_star_assoc = Holds::not_applicable;
  // any self-map (one-sided unital): nucleus; xy <= z⋆ iff xy⋆ <= z⋆ iff x⋆y <= z⋆;
  // x <= x⋆ and (xy <= z⋆ implies x⋆y⋆ <= z⋆); residual forms (near residuated)
  Holds map_nucleus = Holds::no;
  Holds map_adjoint = Holds::not_applicable;
  Holds map_expansive_product = Holds::not_applicable;
  Holds map_residual_left = Holds::not_applicable;   // x⋆/y = x⋆/y⋆
  Holds map_residual_right = Holds::not_applicable;  // y\x⋆ = y⋆\x⋆
};

struct MapReport {
  bool expansive = false, monotone = false, idempotent = false;
  bool is_preclosure = false, is_closure = false, is_nucleus = false, is_strict_nucleus = false;
  Battery battery;
};

// Caches per-structure data so many maps can be checked cheaply.
class MapChecker {
 public:
  // m must outlive the checker. Without battery only the axiom checks work.
  explicit MapChecker(const FinOrderedMagma& m, bool battery = true);
  MapReport check(const SelfMap& map) const;
  bool is_closure(const SelfMap& map) const;
  bool is_nucleus(const SelfMap& map) const;  // closure and x⋆y⋆ <= (xy)⋆

 private:
  bool expansive(const SelfMap& f) const;
  bool monotone(const SelfMap& f) const;
  bool lax(const SelfMap& f) const;
  std::optional<Elem> res(Side s, Elem x, Elem y) const;

  const FinOrderedMagma& m_;
  std::size_t n_;
  bool battery_;
  bool left_unital_ = false, right_unital_ = false, near_residuated_ = false;
  std::vector<int> rdiv_, ldiv_;
};

MapReport check_map(const FinOrderedMagma& m, const SelfMap& map);

// x ↦ least element of C above x; nullopt when some x has none.
std::optional<NucleusMap> closure_from_fixed(const FinOrderedMagma& m, ElemSet c);
// C closed under existing residuals; nullopt unless m is near residuated.
std::optional<bool> residual_criterion(const FinOrderedMagma& m, ElemSet c);

// Smallest closure above an expansive order-preserving map.
NucleusMap closure_of_preclosure(const FinOrderedMagma& m, const SelfMap& pre);
// Bounded complete, near residuated, and xy⁺ <= (xy)⁺, x⁺y <= (xy)⁺.
bool preclosure_nucleus_hypotheses(const FinOrderedMagma& m, const SelfMap& pre);

// Canonical order: larger fixed sets first, then by fixed-set mask.
void canonical_sort(std::vector<NucleusMap>& v);
std::vector<NucleusMap> enumerate_closures(const FinOrderedMagma& m);
std::vector<NucleusMap> enumerate_nuclei(const FinOrderedMagma& m, bool prune = true);

}  // namespace qlab
