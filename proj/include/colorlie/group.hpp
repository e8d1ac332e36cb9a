#pragma once

#include "colorlie/report.hpp"
#include "colorlie/scalar.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace colorlie {

/// Element of a product of cyclic groups, one residue per factor.
struct GroupElement {
  std::vector<int> residues;

  friend bool operator==(const GroupElement &, const GroupElement &) = default;
  /// "(a,b,...)"
  std::string to_string() const;
  static GroupElement parse(std::string_view text);
};

/// Z_{n1} x ... x Z_{nk}.  Elements are addressed by a mixed-radix index
/// (first factor most significant) so tables are plain vectors.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  static FiniteAbelianGroup klein() { return FiniteAbelianGroup({2, 2}); }
  /// G x H with the factors of G first.
  static FiniteAbelianGroup product(const FiniteAbelianGroup &g, const FiniteAbelianGroup &h);

  const std::vector<int> &cyclic_orders() const { return orders_; }
  int order() const { return order_; }
  int identity() const { return 0; }

  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * order_ + h]; }
  int inv(int g) const { return inverse_[g]; }

  GroupElement element(int index) const;
  int index(const GroupElement &g) const;
  /// Same as element(index).to_string().
  std::string name(int index) const { return element(index).to_string(); }

  /// Throws GroupMismatch when the residue tuple has the wrong shape or range.
  GroupElement op(const GroupElement &g, const GroupElement &h) const;

  friend bool operator==(const FiniteAbelianGroup &a, const FiniteAbelianGroup &b) {
    return a.orders_ == b.orders_;
  }

private:
  std::vector<int> orders_;
  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

/// Dense value table on G x G, indexed [g * |G| + h].
class GroupTable {
public:
  GroupTable() = default;
  GroupTable(FiniteAbelianGroup group, std::vector<Scalar> values);

  const FiniteAbelianGroup &group() const { return group_; }
  const Scalar &operator()(int g, int h) const {
    return values_[static_cast<std::size_t>(g) * group_.order() + h];
  }
  const std::vector<Scalar> &values() const { return values_; }

  static GroupTable constant(const FiniteAbelianGroup &group, const Scalar &value);

  friend bool operator==(const GroupTable &, const GroupTable &) = default;

private:
  FiniteAbelianGroup group_;
  std::vector<Scalar> values_;
};

/// Exponent-matrix presentation: value(a, b) = zeta^(sum_jk M[j][k] a_j b_k)
/// with zeta a primitive root of unity of order 1, 2 or 4 (1, -1, i).
struct ExponentForm {
  std::vector<std::vector<int>> matrix;
  int root_order = 2;

  friend bool operator==(const ExponentForm &, const ExponentForm &) = default;
};

/// Builds the table of an exponent form.  Throws Unrepresentable for root
/// orders outside {1, 2, 4} and Invalid if the form is not well defined on
/// the residues.
GroupTable table_from_exponents(const FiniteAbelianGroup &group, const ExponentForm &form);

class Bicharacter {
public:
  const GroupTable &table() const { return table_; }
  const FiniteAbelianGroup &group() const { return table_.group(); }
  const Scalar &operator()(int g, int h) const { return table_(g, h); }
  /// Present when the bicharacter was built from an exponent matrix.
  const std::optional<ExponentForm> &exponent_form() const { return form_; }

  static Bicharacter trivial(const FiniteAbelianGroup &group);

  friend bool operator==(const Bicharacter &a, const Bicharacter &b) {
    return a.table_ == b.table_;
  }

private:
  friend Bicharacter validate_bicharacter(GroupTable, std::optional<ExponentForm>);
  GroupTable table_;
  std::optional<ExponentForm> form_;
};

/// Checks nonzero values, antisymmetry and bilinearity (in that order).
/// Throws ZeroValue / Antisym / Bilinear with the first witness.
Bicharacter validate_bicharacter(GroupTable table, std::optional<ExponentForm> form = {});
Bicharacter bicharacter_from_exponents(const FiniteAbelianGroup &group, const ExponentForm &form);

class Cocycle {
public:
  const GroupTable &table() const { return table_; }
  const FiniteAbelianGroup &group() const { return table_.group(); }
  const Scalar &operator()(int g, int h) const { return table_(g, h); }
  const std::optional<ExponentForm> &exponent_form() const { return form_; }
  /// The factor 1/c(e,e) applied during validation.
  const Scalar &normalization() const { return scale_; }

  static Cocycle trivial(const FiniteAbelianGroup &group);
  /// Pointwise inverse; again a normalized cocycle.
  Cocycle inverse() const;
  /// Pointwise product with another cocycle on the same group.
  Cocycle times(const Cocycle &other) const;
  /// Skips validation.  Only for exercising checkers on corrupted tables.
  static Cocycle unchecked(GroupTable table);

  friend bool operator==(const Cocycle &a, const Cocycle &b) { return a.table_ == b.table_; }

private:
  friend Cocycle validate_cocycle(GroupTable, std::optional<ExponentForm>);
  GroupTable table_;
  std::optional<ExponentForm> form_;
  Scalar scale_{1};
};

/// Checks nonzero values and c(g,h)c(gh,k) = c(h,k)c(g,hk) on all triples,
/// then rescales by 1/c(e,e).  Throws ZeroValue or Cocycle.
Cocycle validate_cocycle(GroupTable table, std::optional<ExponentForm> form = {});
Cocycle cocycle_from_exponents(const FiniteAbelianGroup &group, const ExponentForm &form);

/// B_c(g,h) = c(g,h)/c(h,g).  Asserts bilinearity and B_c(g,g) = 1.
GroupTable bc_form(const Cocycle &c);

/// Exhaustive check of the consequences of the cocycle condition:
///  edge values c(g,e) = c(e,h) = c(e,e), c(h,h^-1) = c(h^-1,h),
///  c(g^-1,h)/(c(g,g^-1)c(h,h^-1 g)) = 1/c(h^-1 g, g^-1 h) over G^2 and
///  c(g,b)c(g,h)c(a,b)c(ab,gh) = c(b,g)c(a,g)c(b,h)c(ag,bh) over G^4.
CheckReport check_cocycle_identities(const Cocycle &c);

/// The cocycle c((a1,a2),(b1,b2)) = (-1)^(a1 b2) on Z2 x Z2.
Cocycle example_cocycle();
/// The bicharacter (-1)^(a1 b2 - a2 b1) on Z2 x Z2.
Bicharacter example_epsilon();

} // namespace colorlie
