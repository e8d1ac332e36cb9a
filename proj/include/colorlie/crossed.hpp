#pragma once

#include "colorlie/group.hpp"
#include "colorlie/matrix.hpp"
#include "colorlie/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace colorlie {

struct Grading {
  FiniteAbelianGroup group;
  std::vector<int> degrees; // one group index per basis element

  friend bool operator==(const Grading &, const Grading &) = default;
};

/// Finite-dimensional associative algebra by structure constants,
/// e_i e_j = sum_k mult[(i*n + j)*n + k] e_k.
struct AssocAlgebra {
  std::vector<std::string> names;
  std::vector<Scalar> mult;
  std::vector<Scalar> unit;
  std::optional<Grading> grading;

  std::size_t dim() const { return names.size(); }
  Scalar &at(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim() + j) * dim() + k]; }
  const Scalar &at(std::size_t i, std::size_t j, std::size_t k) const {
    return mult[(i * dim() + j) * dim() + k];
  }
  std::vector<Scalar> product(const std::vector<Scalar> &a, const std::vector<Scalar> &b) const;
  std::vector<Scalar> basis_vector(std::size_t i) const;

  friend bool operator==(const AssocAlgebra &, const AssocAlgebra &) = default;
};

/// Associativity on basis triples, two-sided unit, and (if graded)
/// compatibility of the product with the degrees.
CheckReport check_assoc_algebra(const AssocAlgebra &A);

/// G acting on an algebra through one matrix per group element.
struct GroupAction {
  FiniteAbelianGroup group;
  std::vector<Matrix> matrices;
};

/// Homomorphism into Aut(A): identity at e, composition, and each matrix
/// multiplicative and unit-preserving.
CheckReport check_action(const AssocAlgebra &A, const GroupAction &action);

/// The one-dimensional algebra K.
AssocAlgebra ground_field();
/// KG with its natural grading; basis u(g).
AssocAlgebra group_algebra(const FiniteAbelianGroup &G);
/// KG^c: u_g u_h = c(g,h) u_gh, graded by g.
AssocAlgebra twisted_group_ring(const Cocycle &c);
/// Full n x n matrices with basis E_ij (row-major).
AssocAlgebra matrix_algebra(std::size_t n);
/// Ordinary tensor product; graded by G x H when both factors are graded.
/// Basis (i, j) sits at index i * dim(B) + j.
AssocAlgebra tensor_product(const AssocAlgebra &A, const AssocAlgebra &B);
/// A^c: e_i o e_j = c(|e_i|, |e_j|) e_i e_j.  Requires a homogeneous basis.
AssocAlgebra cocycle_twist(const AssocAlgebra &A, const Cocycle &c);

/// Checks f(e_i e_j) = f(e_i) f(e_j) on all basis pairs and f(1) = 1.  `f`
/// maps coordinates of `source` (columns) to coordinates of `target`.
CheckReport check_algebra_map(const Matrix &f, const AssocAlgebra &source,
                              const AssocAlgebra &target, const std::string &code);

/// Element sum a_i * g-bar, keyed by (basis index of A_e, group index).
struct CrossedProductElement {
  std::map<std::pair<int, int>, Scalar> terms;

  friend bool operator==(const CrossedProductElement &, const CrossedProductElement &) = default;
};

/// A_e *_c G for finite-dimensional A_e.
class CrossedProduct {
public:
  /// Validates A_e, the action and the cocycle's group.
  CrossedProduct(AssocAlgebra base, GroupAction action, Cocycle c);
  /// Skips validation of the base algebra and the action; shapes are still
  /// checked.
  static CrossedProduct unchecked(AssocAlgebra base, GroupAction action, Cocycle c);

  const AssocAlgebra &base() const { return base_; }
  const GroupAction &action() const { return action_; }
  const Cocycle &cocycle() const { return c_; }
  const FiniteAbelianGroup &group() const { return c_.group(); }

  /// (a * g-bar)(b * h-bar) = c(g,h) a (g.b) * gh-bar
  CrossedProductElement mul(const CrossedProductElement &x, const CrossedProductElement &y) const;
  CrossedProductElement basis_element(int i, int g, const Scalar &coef = 1) const;

  /// Basis (i, g) at index i * |G| + g.
  std::size_t index(int i, int g) const {
    return static_cast<std::size_t>(i) * group().order() + g;
  }
  /// The crossed product as structure constants.
  AssocAlgebra as_algebra() const;

private:
  CrossedProduct(AssocAlgebra base, GroupAction action, Cocycle c, bool validate);
  AssocAlgebra base_;
  GroupAction action_;
  Cocycle c_;
};

/// A module over A_e *_c G given by the images of the generators a_i * e-bar
/// and 1 * g-bar.
struct CrossedModule {
  std::vector<Matrix> base_generators;  // one per basis element of A_e
  std::vector<Matrix> group_generators; // one per group element
  std::size_t dim() const { return group_generators.empty() ? 0 : group_generators[0].rows(); }
};

/// Verifies the defining relations of the crossed product on the matrices.
CheckReport check_crossed_module(const CrossedProduct &A, const CrossedModule &W);

/// p(w) = (1/|G|) sum_g (1/c(g,g^-1)) g-bar p_e(g^-1-bar w).  Throws
/// NotAeEquiv when p_e is not an A_e-linear projection onto span(V) and
/// NotEquiv when the result fails to be an A-linear projection onto span(V).
Matrix averaging_projector(const CrossedProduct &A, const CrossedModule &W, const Matrix &V,
                           const Matrix &p_e);

struct KleinModuleFixture {
  CrossedProduct algebra; // K *_c G, i.e. KG^c for the example cocycle
  CrossedModule module;   // K^2 (+) K^2 through F (+) F
  Matrix V;               // the first summand
};
KleinModuleFixture klein_module_fixture();

/// [[I, X], [0, 0]] with a seeded random 2x2 block X chosen so that the
/// projection does not commute with the group generators of the fixture.
Matrix random_nonequivariant_projection(std::uint64_t seed);

struct PsiResult {
  AssocAlgebra domain;   // A^c *_c G
  AssocAlgebra codomain; // KG^c (x) A
  Matrix psi;
  Matrix psi_inverse;
  CheckReport report;
};

/// Psi(a^c * g-bar) = c(|a|,g) u_{|a|g} (x) a with the action
/// g.a^c = (c(g,|a|)/c(|a|,g)) a^c; checks both compositions are the
/// identity and that Psi is multiplicative on all basis pairs (E_PSI).
PsiResult psi_iso(const AssocAlgebra &A, const Cocycle &c);

struct EpsTensorResult {
  AssocAlgebra algebra; // A (x)^eps B, graded by G x G
  CheckReport report;   // identity map onto (A (x) B)^c, c((g,h),(g',h')) = eps(h,g')
};

/// (a (x) b)(a' (x) b') = eps(|b|,|a'|) aa' (x) bb'.
EpsTensorResult eps_tensor(const AssocAlgebra &A, const AssocAlgebra &B, const Bicharacter &eps);

struct FIsoResult {
  std::vector<Matrix> images; // F(u_g), indexed by group element
  CheckReport report;
};

/// The isomorphism KG^c -> M_2(K) for the Z2 x Z2 example cocycle.
FIsoResult f_iso();

} // namespace colorlie
