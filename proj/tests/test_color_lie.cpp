#include "colorlie/color_lie.hpp"
#include "colorlie/error.hpp"
#include "colorlie/matrix.hpp"

#include <doctest.h>

using namespace colorlie;

namespace {

Matrix m2(Scalar a, Scalar b, Scalar c, Scalar d) { return Matrix(2, 2, {a, b, c, d}); }

// a1, a2, a3 as 2x2 matrices built from the defining module of sl2.
std::vector<Matrix> graded_sl2_matrices() {
  const Scalar i = Scalar::i();
  const Matrix e = m2(0, 1, 0, 0), h = m2(1, 0, 0, -1), f = m2(0, 0, 1, 0);
  return {(e - f) * (i * Scalar(1, 2)), (e + f) * Scalar(-1, 2), h * (i * Scalar(1, 2))};
}

// Coordinates of a traceless 2x2 matrix in the basis above.
std::vector<Scalar> coordinates(const Matrix &x) {
  const auto a = graded_sl2_matrices();
  Matrix basis(4, 3);
  for (int k = 0; k < 3; ++k)
    for (int r = 0; r < 4; ++r)
      basis(r, k) = a[k].data()[r];
  Matrix target(4, 1, x.data());
  auto sol = solve_in_span(basis, target);
  REQUIRE(sol);
  return sol->column(0);
}

ColorLieData sl2c_data_with(const Scalar &s21) {
  auto d = builtin_algebra("sl2c").data();
  d.at(1, 0, 2) = s21;
  return d;
}

} // namespace

TEST_CASE("graded sl2 brackets come from the matrix realization") {
  const auto L = builtin_algebra("sl2_graded");
  const auto a = graded_sl2_matrices();
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const auto want = coordinates(a[x] * a[y] - a[y] * a[x]);
      for (int k = 0; k < 3; ++k)
        CHECK(L.structure(x, y, k) == want[k]);
    }
  CHECK(L.structure(0, 1, 2) == Scalar(-1));
  CHECK(L.eps() == Bicharacter::trivial(FiniteAbelianGroup::klein()));
}

TEST_CASE("sl2c structure") {
  const auto L = builtin_algebra("sl2c");
  const auto &G = L.group();
  CHECK(L.eps()(G.index(GroupElement{{1, 0}}), G.index(GroupElement{{0, 1}})) == Scalar(-1));
  CHECK(L.structure(0, 1, 2) == Scalar(1));
  CHECK(L.structure(1, 2, 0) == Scalar(1));
  CHECK(L.structure(2, 0, 1) == Scalar(1));
  CHECK(L.degree(0) == G.index(GroupElement{{1, 0}}));
  CHECK(L.degree(2) == G.index(GroupElement{{1, 1}}));
  CHECK(L.find("a2") == 1);
  CHECK(L.find("b") == -1);
}

TEST_CASE("validation witnesses") {
  CHECK_THROWS_WITH_AS(validate_color_lie(sl2c_data_with(Scalar(-1))),
                       doctest::Contains("E_COLOR_SYM"), AlgebraError);

  auto graded = builtin_algebra("sl2c").data();
  graded.at(0, 1, 0) = 1; // <a1,a2> must have degree (1,1)
  CHECK_THROWS_WITH_AS(validate_color_lie(graded), doctest::Contains("E_GRADATION"),
                       AlgebraError);

  // [x,y] = x, [x,z] = y on an even basis fails Jacobi on (x,y,z)
  const FiniteAbelianGroup Z2({2});
  auto eps = validate_bicharacter(GroupTable(Z2, {1, 1, 1, -1}));
  auto d = ColorLieData::abelian(Z2, eps, {{"x", 0}, {"y", 0}, {"z", 0}});
  d.at(0, 1, 0) = 1;
  d.at(1, 0, 0) = -1;
  CHECK_NOTHROW(validate_color_lie(d));
  d.at(0, 2, 1) = 1;
  d.at(2, 0, 1) = -1;
  CHECK_THROWS_WITH_AS(validate_color_lie(d), doctest::Contains("E_JACOBI"), AlgebraError);
}

TEST_CASE("abelian algebras are valid") {
  const auto eps = example_epsilon();
  auto d = ColorLieData::abelian(eps.group(), eps, {{"x", 1}, {"y", 2}, {"z", 3}, {"w", 0}});
  CHECK_NOTHROW(validate_color_lie(d));
}

TEST_CASE("the printed sign variant is a Lie algebra but does not twist to sl2c") {
  auto d = builtin_algebra("sl2_graded").data();
  d.at(1, 2, 0) = -1;
  d.at(2, 1, 0) = 1;
  const auto variant = validate_color_lie(d);
  const auto twisted = cocycle_twist(variant, example_triple());
  CHECK_FALSE(twisted == builtin_algebra("sl2c"));
}

TEST_CASE("twisting") {
  const auto graded = builtin_algebra("sl2_graded");
  const auto t = example_triple();
  CHECK(cocycle_twist(graded, t) == builtin_algebra("sl2c"));

  // oracle: scale each bracket by c(|x|,|y|)
  const auto L = cocycle_twist(graded, t);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(L.structure(i, j, k) ==
              t.c(graded.degree(i), graded.degree(j)) * graded.structure(i, j, k));

  const auto &G = graded.group();
  const TwistTriple trivial{Cocycle::trivial(G), GroupMorphism::identity(G), graded.eps()};
  CHECK(cocycle_twist(graded, trivial) == graded);

  const TwistTriple back{t.c.inverse(), GroupMorphism::identity(G), graded.eps()};
  CHECK(cocycle_twist(L, back) == graded);
}

TEST_CASE("incompatible triples") {
  const auto graded = builtin_algebra("sl2_graded");
  const auto &G = graded.group();
  const TwistTriple bad{example_cocycle(), GroupMorphism::identity(G), Bicharacter::trivial(G)};
  try {
    check_compatible(graded.eps(), bad);
    FAIL("expected E_INCOMPATIBLE_TRIPLE");
  } catch (const AlgebraError &e) {
    CHECK(e.code() == ErrorCode::IncompatibleTriple);
  }
  CHECK_THROWS_AS(cocycle_twist(graded, bad), AlgebraError);
}

TEST_CASE("group morphisms") {
  const auto K = FiniteAbelianGroup::klein();
  const FiniteAbelianGroup Z2({2});
  // projection onto the first factor
  CHECK_NOTHROW(GroupMorphism(K, Z2, {0, 0, 1, 1}));
  CHECK_THROWS_WITH_AS(GroupMorphism(K, Z2, {0, 1, 1, 1}),
                       doctest::Contains("E_NOT_HOMOMORPHISM"), AlgebraError);
  CHECK(GroupMorphism::identity(K).is_identity());
}

TEST_CASE("twisting along a non-identity morphism") {
  // abelian algebra over Z2 x Z2, pushed to Z2 by the first projection
  const auto K = FiniteAbelianGroup::klein();
  const FiniteAbelianGroup Z2({2});
  auto d = ColorLieData::abelian(K, Bicharacter::trivial(K), {{"x", 2}, {"y", 1}});
  const auto L = validate_color_lie(d);
  const TwistTriple t{Cocycle::trivial(K), GroupMorphism(K, Z2, {0, 0, 1, 1}),
                      Bicharacter::trivial(Z2)};
  const auto M = cocycle_twist(L, t);
  CHECK(M.group() == Z2);
  CHECK(M.degree(0) == 1);
  CHECK(M.degree(1) == 0);
}

TEST_CASE("unknown builtin") {
  CHECK_THROWS_AS(builtin_algebra("so3"), AlgebraError);
}
