#pragma once

#include "colorlie/enveloping.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace colorlie {

/// Basis element g (x) u of KG (x) U(L); also used for u * g-bar in the
/// crossed product U(L) *_1 G.
using AugKey = std::pair<int, PbwMonomial>;
using AugTerms = std::map<AugKey, Scalar>;

struct AugmentedElement {
  AugTerms terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const AugmentedElement &, const AugmentedElement &) = default;
};

/// Elements of the ordinary tensor squares and cubes of the augmented algebra.
using Tensor2 = std::map<std::pair<AugKey, AugKey>, Scalar>;
using Tensor3 = std::map<std::tuple<AugKey, AugKey, AugKey>, Scalar>;

/// The augmented enveloping algebra KG (x) U(L) with
/// (g (x) x)(h (x) y) = eps(|x|, h) gh (x) xy, and its Hopf structure
/// Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) h, counit(g) = 1,
/// counit(x) = 0, S(g) = g^-1, S(x) = -x h^-1 for x in L_h.
class AugmentedEnvelope {
public:
  explicit AugmentedEnvelope(UniversalEnvelope U) : U_(std::move(U)) {}

  const UniversalEnvelope &envelope() const { return U_; }
  const FiniteAbelianGroup &group() const { return U_.algebra().group(); }

  AugmentedElement one() const { return basis_element(group().identity(), unit()); }
  AugmentedElement group_element(int g) const { return basis_element(g, unit()); }
  /// e (x) x_i
  AugmentedElement generator(std::size_t i) const;
  AugmentedElement basis_element(int g, const PbwMonomial &m, const Scalar &coef = 1) const;
  /// e (x) u
  AugmentedElement embed(const EnvelopingElement &u) const;

  AugmentedElement add(const AugmentedElement &a, const AugmentedElement &b) const;
  AugmentedElement scale(const AugmentedElement &a, const Scalar &s) const;
  AugmentedElement mul(const AugmentedElement &a, const AugmentedElement &b) const;

  Tensor2 coproduct(const AugmentedElement &u) const;
  Scalar counit(const AugmentedElement &u) const;
  AugmentedElement antipode(const AugmentedElement &u) const;

  Tensor2 tensor_mul(const Tensor2 &a, const Tensor2 &b) const;

  /// Runs the counit laws, antipode laws m(S (x) id)Delta = m(id (x) S)Delta
  /// = counit * 1, coassociativity, and multiplicativity of Delta, counit
  /// and anti-multiplicativity of S on all pairs of the given elements.
  CheckReport hopf_axiom_check(const std::vector<AugmentedElement> &spanning) const;

  /// {g} u {g (x) x_i} u {e (x) x_i x_j}
  std::vector<AugmentedElement> standard_spanning_set() const;

  std::string to_string(const AugmentedElement &a) const;

private:
  PbwMonomial unit() const { return PbwMonomial(U_.generators(), 0); }
  UniversalEnvelope U_;
};

/// Builds U(L) *_1 G with g.x = eps(g,|x|)x and verifies that
/// Phi(g (x) x) = eps(g,|x|) x * g-bar is multiplicative on all group
/// pairs and monomial pairs of degree <= d, and bijective on that range.
CheckReport phi_check(const ColorLieAlgebra &L, int d = 2);

} // namespace colorlie
