#include "colorlie/error.hpp"
#include "colorlie/rep_theory.hpp"

#include <doctest.h>

#include <random>

using namespace colorlie;

namespace {

const std::vector<std::pair<int, int>> alphas{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

Scalar half(long k) { return Scalar(k, 2); }

Representation conjugate(const Representation &r, const Matrix &P) {
  const auto Pinv = inverse(P);
  REQUIRE(Pinv);
  Representation out = r;
  for (auto &m : out.matrices)
    m = *Pinv * m * P;
  return out;
}

Matrix random_invertible(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  for (;;) {
    Matrix P(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        P(i, j) = d(rng);
    if (rank(P) == n)
      return P;
  }
}

// Unit upper triangular with small entries: invertible and mild on coefficients.
Matrix random_unitriangular(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-1, 1);
  Matrix P = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      P(i, j) = d(rng);
  return P;
}

} // namespace

TEST_CASE("one-dimensional V modules") {
  for (auto [a1, a2] : alphas) {
    const auto r = make_V(1, a1, a2);
    CHECK(r.dim == 1);
    CHECK(r.matrices[0](0, 0) == half(a1 * a2));
    CHECK(r.matrices[1](0, 0) == half(-a2));
    CHECK(r.matrices[2](0, 0) == half(-a1));
    // 2 (a1 a2 / 2)(-a2 / 2) = -a1 / 2
    CHECK(Scalar(2) * r.matrices[0](0, 0) * r.matrices[1](0, 0) == r.matrices[2](0, 0));
    CHECK(check_representation(r).passed);
  }
}

TEST_CASE("two-dimensional V module entries") {
  const auto r = make_V(2, 1, 1);
  CHECK(r.matrices[2] == Matrix(2, 2, {half(-3), 0, 0, half(1)}));
  CHECK(r.matrices[0](1, 0) == half(3)); // a1.e1 = (3/2) e2
  const auto &A1 = r.matrices[0], &A3 = r.matrices[2];
  CHECK(A3 * A1 + A1 * A3 == r.matrices[1]);
}

TEST_CASE("a3 is diagonal on every V module") {
  for (int n = 1; n <= 7; ++n)
    for (auto [a1, a2] : alphas) {
      const auto r = make_V(n, a1, a2);
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          const Scalar want =
              j == k ? Scalar(a1) * sign_power(j) * half(2 * n - 2 * j + 1) : Scalar(0);
          CHECK(r.matrices[2](k - 1, j - 1) == want);
        }
    }
}

TEST_CASE("W modules") {
  const auto w1 = make_W(1);
  for (const auto &m : w1.matrices)
    CHECK(m.is_zero());
  CHECK(check_representation(w1).passed);
  CHECK(make_W(3).matrices[2] == Matrix(3, 3, {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  for (int n = 1; n <= 9; n += 2) {
    const auto w = make_W(n);
    for (int j = 1; j <= n; ++j)
      CHECK(w.matrices[2](j - 1, j - 1) == sign_power(j) * half(n - 2 * j + 1));
  }
  CHECK_THROWS_WITH_AS(make_W(2), doctest::Contains("E_EVEN_N"), AlgebraError);
}

TEST_CASE("catalog modules satisfy the relations") {
  for (int n = 1; n <= 10; ++n) {
    for (auto [a1, a2] : alphas)
      CHECK(check_representation(make_V(n, a1, a2)).passed);
    if (n % 2 == 1)
      CHECK(check_representation(make_W(n)).passed);
  }
}

TEST_CASE("broken matrices are rejected") {
  auto r = make_V(3, 1, -1);
  r.matrices[1](0, 0) += 1;
  const auto rep = check_representation(r);
  CHECK_FALSE(rep.passed);
  CHECK(rep.code == "E_NOT_REP");
}

TEST_CASE("simple sl2 modules") {
  CHECK(check_representation(make_sl2_simple(0)).passed);
  for (const auto &m : make_sl2_simple(0).matrices)
    CHECK(m.is_zero());
  const auto v1 = make_sl2_simple(1);
  const auto &L = v1.algebra;
  const auto E = v1.matrices[L.find("e")], F = v1.matrices[L.find("f")],
             H = v1.matrices[L.find("h")];
  CHECK(E * F - F * E == H);
  for (int n = 0; n <= 6; ++n) {
    const auto v = make_sl2_simple(n);
    CHECK(check_representation(v).passed);
    // highest weight vector v_n
    CHECK(v.matrices[v.algebra.find("h")](n, n) == Scalar(n));
  }
}

TEST_CASE("K2 tensor modules") {
  const Scalar i = Scalar::i();
  for (int n = 0; n <= 5; ++n) {
    const auto r = make_K2_tensor(n);
    CHECK(r.dim == static_cast<std::size_t>(2 * (n + 1)));
    CHECK(check_representation(r).passed);
    CHECK(r.matrices == gamma_substitute(make_sl2_simple(n)).matrices);
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j <= n; ++j) {
        const std::size_t col = k * (n + 1) + j, row = (1 - k) * (n + 1) + j;
        CHECK(r.matrices[2](row, col) == i * half(1) * sign_power(k) * Scalar(n - 2 * j));
      }
  }
  for (const auto &m : make_K2_tensor(0).matrices)
    CHECK(m.is_zero());
  CHECK(gamma_check(4).passed);
}

TEST_CASE("intertwiners and simplicity") {
  CHECK(intertwiner_space(make_V(2, 1, 1), make_V(2, 1, 1)).size() == 1);
  CHECK(intertwiner_space(make_V(1, 1, 1), make_V(1, 1, -1)).empty());
  CHECK(intertwiner_space(make_V(2, 1, 1), make_V(2, 1, -1)).empty());
  Representation zero{builtin_algebra("sl2c"), 0, std::vector<Matrix>(3, Matrix(0, 0))};
  CHECK(intertwiner_space(make_V(2, 1, 1), zero).empty());

  CHECK(is_absolutely_simple(make_V(3, 1, 1)));
  CHECK(is_absolutely_simple(make_W(1)));
  const auto sum = direct_sum(make_V(1, 1, 1), make_V(1, 1, -1));
  CHECK_FALSE(is_absolutely_simple(sum));
  CHECK(commutant(sum).size() == 2);
  CHECK(intertwiner_space(sum, sum).size() == 2);
}

TEST_CASE("catalog labels") {
  CHECK(catalog_label("V", 3, 1, -1) == "V3(1,-1)");
  CHECK(catalog_label("W", 5) == "W5");
  CHECK(catalog(2).size() == 4);
  CHECK(catalog(3).size() == 5);
}

TEST_CASE("decomposition of K2 tensor modules") {
  CHECK(decompose(make_K2_tensor(2)).summary() == "W3 + W3");
  const auto d = decompose(make_K2_tensor(3));
  CHECK(d.multiplicities == std::map<std::string, int>{{"V2(1,1)", 1},
                                                       {"V2(1,-1)", 1},
                                                       {"V2(-1,1)", 1},
                                                       {"V2(-1,-1)", 1}});
  const auto one = decompose(make_K2_tensor(1));
  CHECK(one.factors.size() == 4);
  for (const auto &f : one.factors) {
    bool matched = false;
    for (auto [a1, a2] : alphas)
      matched = matched || f.rep.matrices == make_V(1, a1, a2).matrices;
    CHECK(matched);
  }
  // factors are submodules and the bases fill the space
  const auto r = make_K2_tensor(4);
  const auto e = decompose(r);
  CHECK(rank(e.change_of_basis) == r.dim);
  for (const auto &f : e.factors) {
    const auto sub = restrict_to(r, f.basis);
    CHECK(sub.matrices == f.rep.matrices);
    CHECK(is_absolutely_simple(f.rep));
  }
}

TEST_CASE("decomposition of simples and disguised sums") {
  for (const auto &[label, rep] : catalog(3)) {
    const auto d = decompose(rep);
    CHECK(d.summary() == label);
  }
  auto sum = direct_sum(direct_sum(make_V(2, -1, 1), make_W(3)), make_V(2, -1, 1));
  const auto mixed = conjugate(sum, random_invertible(sum.dim, 11));
  CHECK(check_representation(mixed).passed);
  const auto d = decompose(mixed, 3);
  CHECK(d.multiplicities == std::map<std::string, int>{{"V2(-1,1)", 2}, {"W3", 1}});
  CHECK(d.summary() == "V2(-1,1) + V2(-1,1) + W3");

  const auto triple = direct_sum(direct_sum(make_W(3), make_W(3)), make_W(3));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto d3 = decompose(conjugate(triple, random_unitriangular(triple.dim, seed)), seed);
    CHECK(d3.summary() == "W3 + W3 + W3");
  }

  auto broken = make_V(2, 1, 1);
  broken.matrices[0](0, 0) += 1;
  CHECK_THROWS_WITH_AS(decompose(broken), doctest::Contains("E_NOT_REP"), AlgebraError);
}

TEST_CASE("perturbed direct sums are either invalid or split") {
  std::mt19937 rng(5);
  for (int t = 0; t < 6; ++t) {
    auto r = direct_sum(make_V(1, 1, 1), make_V(1, -1, -1));
    const int which = t % 3;
    r.matrices[which](0, 1) = static_cast<long>(rng() % 5) + 1;
    if (check_representation(r).passed)
      CHECK(decompose(r).factors.size() == 2);
  }
}

TEST_CASE("explicit intertwiners") {
  for (int n = 1; n <= 5; ++n) {
    const auto ex = explicit_decomposition(n);
    CHECK(ex.report.passed);
    CHECK(ex.even_part.size() == 4);
    if (n % 2 == 1)
      CHECK(ex.odd_part == std::map<std::string, int>{{catalog_label("W", n), 2}});
  }
}

TEST_CASE("counts of simple catalog modules") {
  std::vector<CountRow> rows;
  CHECK(catalog_counts(6, &rows).passed);
  REQUIRE(rows.size() == 6);
  for (const auto &row : rows) {
    CHECK(row.simple == (row.n % 2 == 1 ? 5 : 4));
    CHECK(row.simple == row.expected);
  }
}
