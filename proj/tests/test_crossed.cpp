#include "colorlie/crossed.hpp"
#include "colorlie/error.hpp"

#include <doctest.h>

using namespace colorlie;

namespace {

GroupAction trivial_action(const AssocAlgebra &A, const FiniteAbelianGroup &G) {
  return {G, std::vector<Matrix>(G.order(), Matrix::identity(A.dim()))};
}

Matrix m2(Scalar a, Scalar b, Scalar c, Scalar d) { return Matrix(2, 2, {a, b, c, d}); }

int el(const FiniteAbelianGroup &G, int a, int b) { return G.index(GroupElement{{a, b}}); }

} // namespace

TEST_CASE("structure-constant algebras are associative") {
  CHECK(check_assoc_algebra(ground_field()).passed);
  CHECK(check_assoc_algebra(group_algebra(FiniteAbelianGroup({2, 3}))).passed);
  CHECK(check_assoc_algebra(twisted_group_ring(example_cocycle())).passed);
  CHECK(check_assoc_algebra(matrix_algebra(3)).passed);
  CHECK(check_assoc_algebra(tensor_product(matrix_algebra(2), group_algebra(FiniteAbelianGroup({2}))))
            .passed);
  auto broken = matrix_algebra(2);
  broken.at(1, 2, 0) = 2; // E12 E21 = 2 E11
  const auto r = check_assoc_algebra(broken);
  CHECK_FALSE(r.passed);
  CHECK(r.code == "E_NOT_ASSOCIATIVE");
}

TEST_CASE("twisted group ring products") {
  const auto c = example_cocycle();
  const auto &G = c.group();
  const auto A = twisted_group_ring(c);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h)
      for (int k = 0; k < 4; ++k)
        CHECK(A.at(g, h, k) == (k == G.mul(g, h) ? c(g, h) : Scalar(0)));
}

TEST_CASE("crossed product over the ground field") {
  const auto c = example_cocycle();
  const auto &G = c.group();
  const auto K = ground_field();
  CrossedProduct A(K, trivial_action(K, G), c);
  const auto x = A.mul(A.basis_element(0, el(G, 1, 0)), A.basis_element(0, el(G, 0, 1)));
  CHECK(x == A.basis_element(0, el(G, 1, 1), -1));
  CHECK(check_assoc_algebra(A.as_algebra()).passed);
}

TEST_CASE("A_e embeds as the identity component") {
  const auto c = example_cocycle();
  const auto M = matrix_algebra(2);
  CrossedProduct A(M, trivial_action(M, c.group()), c);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CrossedProductElement want;
      for (int k = 0; k < 4; ++k)
        if (!M.at(i, j, k).is_zero())
          want.terms[{k, 0}] = M.at(i, j, k);
      CHECK(A.mul(A.basis_element(i, 0), A.basis_element(j, 0)) == want);
    }
  CHECK(check_assoc_algebra(A.as_algebra()).passed);
}

TEST_CASE("crossed product with a nontrivial action") {
  // Z2 swapping the two idempotents of K x K
  const FiniteAbelianGroup Z2({2});
  AssocAlgebra KK{{"p", "q"}, std::vector<Scalar>(8), {1, 1}, std::nullopt};
  KK.at(0, 0, 0) = 1;
  KK.at(1, 1, 1) = 1;
  GroupAction swap{Z2, {Matrix::identity(2), m2(0, 1, 1, 0)}};
  CHECK(check_action(KK, swap).passed);
  CrossedProduct A(KK, swap, Cocycle::trivial(Z2));
  CHECK(check_assoc_algebra(A.as_algebra()).passed);
  // (p * s)(q * e) = p (s.q) * s = p * s, while (p * s)(p * e) = p q * s = 0
  CHECK(A.mul(A.basis_element(0, 1), A.basis_element(1, 0)) == A.basis_element(0, 1));
  CHECK(A.mul(A.basis_element(0, 1), A.basis_element(0, 0)).terms.empty());

  GroupAction bad{Z2, {Matrix::identity(2), m2(2, 0, 0, 2)}};
  CHECK_FALSE(check_action(KK, bad).passed);
  CHECK_THROWS_AS(CrossedProduct(KK, bad, Cocycle::trivial(Z2)), AlgebraError);
}

TEST_CASE("F identifies the twisted group ring with 2x2 matrices") {
  const auto F = f_iso();
  CHECK(F.report.passed);
  const auto c = example_cocycle();
  const auto &G = c.group();
  const auto &I = F.images;
  CHECK(I[el(G, 0, 0)] == Matrix::identity(2));
  CHECK(I[el(G, 1, 0)] == m2(0, 1, 1, 0));
  CHECK(I[el(G, 0, 1)] == m2(1, 0, 0, -1));
  CHECK(I[el(G, 1, 1)] == m2(0, 1, -1, 0));
  CHECK(I[el(G, 1, 0)] * I[el(G, 0, 1)] == m2(0, -1, 1, 0));
  CHECK(I[el(G, 1, 0)] * I[el(G, 0, 1)] == I[el(G, 1, 1)] * Scalar(-1));
  CHECK(I[el(G, 1, 1)] * I[el(G, 1, 1)] == Matrix::identity(2) * Scalar(-1));
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h)
      CHECK(I[g] * I[h] == I[G.mul(g, h)] * c(g, h));
}

TEST_CASE("Psi") {
  const auto c = example_cocycle();
  const auto &G = c.group();
  const auto KG = group_algebra(G);
  const auto r = psi_iso(KG, c);
  CHECK(r.report.passed);
  CHECK(r.psi * r.psi_inverse == Matrix::identity(16));
  CHECK(check_algebra_map(r.psi, r.domain, r.codomain, "E_PSI").passed);

  // trivial cocycle: a * g-bar goes to u_{|a|g} (x) a without scaling
  const auto t = psi_iso(KG, Cocycle::trivial(G));
  CHECK(t.report.passed);
  for (int h = 0; h < 4; ++h)
    for (int g = 0; g < 4; ++g) {
      const auto col = t.psi.column(h * 4 + g);
      for (std::size_t k = 0; k < col.size(); ++k)
        CHECK(col[k] == (k == static_cast<std::size_t>(G.mul(h, g) * 4 + h) ? Scalar(1)
                                                                              : Scalar(0)));
    }
  // unit to unit
  const auto unit = r.psi.column(0);
  CHECK(unit[0] == Scalar(1));

  auto vals = c.table().values();
  vals[5] = -vals[5];
  const auto bad = psi_iso(KG, Cocycle::unchecked(GroupTable(G, vals)));
  CHECK_FALSE(bad.report.passed);
  CHECK(bad.report.code == "E_PSI");
}

TEST_CASE("eps-tensor product") {
  const auto K = FiniteAbelianGroup::klein();
  const auto KG = group_algebra(K);
  const auto r = eps_tensor(KG, KG, example_epsilon());
  CHECK(r.report.passed);
  CHECK(check_assoc_algebra(r.algebra).passed);
  CHECK(r.algebra.unit == tensor_product(KG, KG).unit);

  const auto plain = eps_tensor(KG, KG, Bicharacter::trivial(K));
  CHECK(plain.report.passed);
  CHECK(plain.algebra.mult == tensor_product(KG, KG).mult);

  // u_a (x) u_b times u_c (x) u_d picks up eps(b, c)
  const auto eps = example_epsilon();
  for (int b = 0; b < 4; ++b)
    for (int cc = 0; cc < 4; ++cc) {
      const std::size_t i = 0 * 4 + b, j = cc * 4 + 0, k = cc * 4 + b;
      CHECK(r.algebra.at(i, j, k) == eps(b, cc));
    }
}

TEST_CASE("averaging projector") {
  const auto fx = klein_module_fixture();
  CHECK(check_crossed_module(fx.algebra, fx.module).passed);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto pe = random_nonequivariant_projection(seed);
    CHECK(pe * pe == pe);
    bool commutes = true;
    for (const auto &g : fx.module.group_generators)
      commutes = commutes && g * pe == pe * g;
    CHECK_FALSE(commutes);
    const auto p = averaging_projector(fx.algebra, fx.module, fx.V, pe);
    CHECK(p * p == p);
    CHECK(p * fx.V == fx.V);
    for (const auto &g : fx.module.group_generators)
      CHECK(g * p == p * g);
    CHECK(rank(p) == 2);
  }
  const Matrix I = Matrix::identity(4);
  CHECK(averaging_projector(fx.algebra, fx.module, I, I) == I);
  const Matrix Z(4, 4);
  CHECK(averaging_projector(fx.algebra, fx.module, Matrix(4, 0), Z) == Z);

  // not a projection onto V
  CHECK_THROWS_WITH_AS(averaging_projector(fx.algebra, fx.module, fx.V, I),
                       doctest::Contains("E_NOT_AE_EQUIV"), AlgebraError);
}
