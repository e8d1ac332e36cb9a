#pragma once

#include "colorlie/group.hpp"

#include <string>
#include <vector>

namespace colorlie {

struct BasisElement {
  std::string name;
  int degree = 0; // group index

  friend bool operator==(const BasisElement &, const BasisElement &) = default;
};

/// Unvalidated definition of a color Lie algebra.  `gamma` is the dense
/// table of structure constants, <x_i, x_j> = sum_k gamma[(i*n + j)*n + k] x_k.
struct ColorLieData {
  FiniteAbelianGroup group;
  Bicharacter eps;
  std::vector<BasisElement> basis;
  std::vector<Scalar> gamma;

  std::size_t dim() const { return basis.size(); }
  Scalar &at(std::size_t i, std::size_t j, std::size_t k) {
    return gamma[(i * dim() + j) * dim() + k];
  }
  const Scalar &at(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma[(i * dim() + j) * dim() + k];
  }
  /// Zero bracket on the given graded basis.
  static ColorLieData abelian(FiniteAbelianGroup group, Bicharacter eps,
                              std::vector<BasisElement> basis);

  friend bool operator==(const ColorLieData &, const ColorLieData &) = default;
};

/// A G-graded eps-Lie algebra whose gradation, color symmetry and color
/// Jacobi identity have been verified on all basis tuples.
class ColorLieAlgebra {
public:
  const ColorLieData &data() const { return data_; }
  const FiniteAbelianGroup &group() const { return data_.group; }
  const Bicharacter &eps() const { return data_.eps; }
  const std::vector<BasisElement> &basis() const { return data_.basis; }
  std::size_t dim() const { return data_.dim(); }
  int degree(std::size_t i) const { return data_.basis[i].degree; }
  const Scalar &structure(std::size_t i, std::size_t j, std::size_t k) const {
    return data_.at(i, j, k);
  }
  /// eps(|x_i|, |x_j|)
  const Scalar &eps_basis(std::size_t i, std::size_t j) const {
    return data_.eps(degree(i), degree(j));
  }
  /// Index of the basis element with this name, or -1.
  int find(const std::string &name) const;

  friend bool operator==(const ColorLieAlgebra &a, const ColorLieAlgebra &b) {
    return a.data_ == b.data_;
  }

private:
  friend ColorLieAlgebra validate_color_lie(ColorLieData);
  ColorLieData data_;
};

/// Throws Gradation(i,j,k), ColorSym(i,j) or Jacobi(i,j,k) with the first
/// violation found.
ColorLieAlgebra validate_color_lie(ColorLieData raw);

/// Group morphism G -> G' stored as a full element table.
class GroupMorphism {
public:
  /// Throws NotHomomorphism if phi(gh) != phi(g)phi(h) somewhere.
  GroupMorphism(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<int> table);
  static GroupMorphism identity(const FiniteAbelianGroup &group);

  const FiniteAbelianGroup &source() const { return source_; }
  const FiniteAbelianGroup &target() const { return target_; }
  int operator()(int g) const { return table_[g]; }
  const std::vector<int> &table() const { return table_; }
  bool is_identity() const;

private:
  FiniteAbelianGroup source_;
  FiniteAbelianGroup target_;
  std::vector<int> table_;
};

/// (c, phi, eps') with eps(g,h)c(g,h) = c(h,g)eps'(phi(g),phi(h)).
struct TwistTriple {
  Cocycle c;
  GroupMorphism phi;
  Bicharacter eps_prime;
};

/// Throws IncompatibleTriple(g,h) when the compatibility equation fails
/// against `eps`, GroupMismatch when the groups do not line up.
void check_compatible(const Bicharacter &eps, const TwistTriple &t);

/// Same basis, degrees pushed through phi, brackets scaled by
/// c(|x_i|, |x_j|).  The result is re-validated.
ColorLieAlgebra cocycle_twist(const ColorLieAlgebra &L, const TwistTriple &t);

/// "sl2" (basis e, h, f; trivial group), "sl2_graded" (a1, a2, a3 over
/// Z2 x Z2, trivial eps) and "sl2c".
ColorLieAlgebra builtin_algebra(const std::string &name);
/// (c, id, eps') taking sl2_graded to sl2c.
TwistTriple example_triple();

} // namespace colorlie
