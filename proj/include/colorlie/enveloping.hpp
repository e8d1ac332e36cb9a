#pragma once

#include "colorlie/color_lie.hpp"
#include "colorlie/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace colorlie {

/// Exponent vector over the ordered Lie basis; x_1^e1 x_2^e2 ... x_n^en.
using PbwMonomial = std::vector<int>;

/// Descending lexicographic order on exponent vectors: higher powers of
/// earlier generators first, the unit monomial last.
struct MonomialOrder {
  bool operator()(const PbwMonomial &a, const PbwMonomial &b) const { return a > b; }
};

using PbwTerms = std::map<PbwMonomial, Scalar, MonomialOrder>;

/// Adds coef * mon into terms, dropping zero coefficients.
void add_term(PbwTerms &terms, const PbwMonomial &mon, const Scalar &coef);

int total_degree(const PbwMonomial &m);

class EnvelopingElement;

namespace detail {
struct EnvelopeImpl;
}

/// The universal enveloping algebra U(L) with products in PBW normal form.
/// The handle is cheap to copy; elements keep their parent alive.
class UniversalEnvelope {
public:
  explicit UniversalEnvelope(ColorLieAlgebra L);

  const ColorLieAlgebra &algebra() const;
  std::size_t generators() const { return algebra().dim(); }

  EnvelopingElement zero() const;
  EnvelopingElement one() const;
  EnvelopingElement scalar(const Scalar &s) const;
  EnvelopingElement generator(std::size_t i) const;
  EnvelopingElement monomial(const PbwMonomial &m, const Scalar &coef = Scalar(1)) const;
  /// Product x_{w1} x_{w2} ... reduced to normal form.
  EnvelopingElement word(std::span<const int> letters) const;
  EnvelopingElement from_terms(PbwTerms terms) const;

  /// Normal form of m1 * m2 (both must be normal monomials).
  const PbwTerms &multiply_monomials(const PbwMonomial &m1, const PbwMonomial &m2) const;

  /// True when exponents are >= 0 and <= 1 on generators with eps(|x|,|x|) = -1.
  bool is_normal(const PbwMonomial &m) const;
  /// G-degree: product of |x_i|^e_i.
  int degree(const PbwMonomial &m) const;
  /// Generator indices of m in ascending order, with repetition.
  std::vector<int> letters(const PbwMonomial &m) const;
  /// All normal monomials of total degree <= d, by degree then MonomialOrder.
  std::vector<PbwMonomial> basis(int d) const;

  std::string monomial_text(const PbwMonomial &m) const;

  friend bool operator==(const UniversalEnvelope &a, const UniversalEnvelope &b) {
    return a.impl_ == b.impl_;
  }

private:
  friend class EnvelopingElement;
  explicit UniversalEnvelope(std::shared_ptr<detail::EnvelopeImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<detail::EnvelopeImpl> impl_;
};

/// Finite linear combination of normal PBW monomials of one U(L).
class EnvelopingElement {
public:
  const PbwTerms &terms() const { return terms_; }
  UniversalEnvelope parent() const { return UniversalEnvelope(parent_); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const PbwMonomial &m) const;
  /// Splits into G-homogeneous components keyed by group index.
  std::map<int, EnvelopingElement> homogeneous_components() const;
  /// Group index when the element is homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;

  EnvelopingElement &operator+=(const EnvelopingElement &o);
  EnvelopingElement &operator-=(const EnvelopingElement &o);
  EnvelopingElement &operator*=(const Scalar &s);

  friend EnvelopingElement operator+(EnvelopingElement a, const EnvelopingElement &b) {
    return a += b;
  }
  friend EnvelopingElement operator-(EnvelopingElement a, const EnvelopingElement &b) {
    return a -= b;
  }
  friend EnvelopingElement operator*(EnvelopingElement a, const Scalar &s) { return a *= s; }
  friend EnvelopingElement operator*(const Scalar &s, EnvelopingElement a) { return a *= s; }
  EnvelopingElement operator-() const;
  /// PBW product; throws ParentMismatch across algebras.
  friend EnvelopingElement operator*(const EnvelopingElement &a, const EnvelopingElement &b);

  friend bool operator==(const EnvelopingElement &a, const EnvelopingElement &b) {
    return a.parent_ == b.parent_ && a.terms_ == b.terms_;
  }

  /// e.g. "-1*a1*a2 + a3"; "0" for zero.
  std::string to_string() const;

private:
  friend class UniversalEnvelope;
  EnvelopingElement(std::shared_ptr<detail::EnvelopeImpl> parent, PbwTerms terms)
      : parent_(std::move(parent)), terms_(std::move(terms)) {}
  void same_parent(const EnvelopingElement &o) const;

  std::shared_ptr<detail::EnvelopeImpl> parent_;
  PbwTerms terms_;
};

/// Product in the cocycle twist U(L)^c: x o y = c(|x|,|y|) xy on
/// homogeneous monomials, extended bilinearly.
EnvelopingElement twisted_mul(const EnvelopingElement &a, const EnvelopingElement &b,
                              const Cocycle &c);

/// Builds Theta: U(L^c) -> U(L)^c on the PBW basis up to degree d and
/// checks Theta(m1 * m2) = Theta(m1) o Theta(m2) for every pair of basis
/// monomials, the generator relations, and linear independence of the
/// images.
CheckReport theta_check(const ColorLieAlgebra &L, const TwistTriple &t, int d);

} // namespace colorlie
