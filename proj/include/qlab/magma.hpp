#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/poset.hpp"

namespace qlab {

// Base data of a power-set structure 2^M, 2^{M_0} or 2^M \ {∅}.
struct PowersetInfo {
  std::vector<std::string> base_labels;  // includes the adjoined zero when present
  std::vector<Elem> base_mul;            // row-major over base_labels
  std::optional<Elem> zero;              // index of the adjoined 0 in base_labels
  bool nonempty_only = false;
  std::vector<ElemSet> subsets;  // subset of the base represented by each element
};

class FinOrderedMagma {
 public:
  FinOrderedMagma() = default;
  // Validates monotonicity and detects identity and annihilator.
  FinOrderedMagma(std::string name, FinPoset poset, std::vector<Elem> table);

  const std::string& name() const { return name_; }
  const FinPoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(Elem x) const { return poset_.label(x); }
  bool leq(Elem a, Elem b) const { return poset_.leq(a, b); }
  Elem mul(Elem a, Elem b) const { return table_[a * size() + b]; }
  const std::vector<Elem>& table() const { return table_; }

  std::optional<Elem> identity() const { return identity_; }
  std::optional<Elem> annihilator() const { return annihilator_; }
  std::optional<Elem> top() const { return poset_.greatest(); }
  std::optional<Elem> bottom() const { return poset_.least(); }
  bool commutative() const { return commutative_; }
  bool associative() const { return associative_; }
  bool unital() const { return identity_.has_value(); }
  bool is_monoid() const { return associative_ && unital(); }

  // Complex product {xy : x in X, y in Y}.
  ElemSet product(ElemSet x, ElemSet y) const;
  // Smallest submagma containing x.
  ElemSet generated(ElemSet x) const;
  bool closed_under_mul(ElemSet x) const;

  const std::optional<PowersetInfo>& powerset_info() const { return powerset_; }
  void set_powerset_info(PowersetInfo info) { powerset_ = std::move(info); }
  void set_name(std::string n) { name_ = std::move(n); }

  friend bool operator==(const FinOrderedMagma& a, const FinOrderedMagma& b) {
    return a.poset_ == b.poset_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  FinPoset poset_;
  std::vector<Elem> table_;
  std::optional<Elem> identity_, annihilator_;
  bool commutative_ = false;
  bool associative_ = false;
  std::optional<PowersetInfo> powerset_;
};

// Label-level description, as read from a structure file.
struct StructureSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::vector<std::string>> mul;
  std::optional<std::string> identity;
  std::optional<std::string> annihilator;
};

FinOrderedMagma validate_structure(const StructureSpec& spec);

// Substructure on a multiplicatively closed subset, labels kept.
FinOrderedMagma substructure(const FinOrderedMagma& m, ElemSet carrier, std::string name = {});

}  // namespace qlab
