#include "colorlie/error.hpp"
#include "colorlie/group.hpp"

#include <doctest.h>

#include <random>

using namespace colorlie;

namespace {

// Independent evaluation of (-1)^(sum M_jk a_j b_k) on Z2 x Z2.
Scalar klein_sign(const std::vector<std::vector<int>> &M, int g, int h) {
  const int a[2] = {g / 2, g % 2}, b[2] = {h / 2, h % 2};
  int e = 0;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      e += M[j][k] * a[j] * b[k];
  return sign_power(e);
}

GroupTable table_of(const FiniteAbelianGroup &G, const std::function<Scalar(int, int)> &f) {
  std::vector<Scalar> v;
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      v.push_back(f(g, h));
  return GroupTable(G, v);
}

} // namespace

TEST_CASE("scalar arithmetic in Q(i)") {
  const Scalar i = Scalar::i();
  CHECK(i * i == Scalar(-1));
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK((Scalar(3) + i) * (Scalar(3) - i) == Scalar(10));
  CHECK((Scalar(1) + i).inverse() == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK(Scalar(2, 4) == Scalar(1, 2));
  CHECK_THROWS_AS(Scalar(0).inverse(), AlgebraError);
  CHECK((Scalar(2) + i).norm() == 5);
}

TEST_CASE("scalar text round trip") {
  for (const char *text : {"0", "1", "-3/4", "1/2+3/5*i", "0+1*i", "-7-1/3*i"}) {
    const Scalar s = Scalar::parse(text);
    CHECK(Scalar::parse(s.to_string()) == s);
  }
  CHECK(Scalar::parse("i") == Scalar::i());
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("1/2*i") == Scalar(mpq_class(0), mpq_class(1, 2)));
  CHECK(Scalar::parse("6/4").to_string() == "3/2");
}

TEST_CASE("malformed scalars report a position") {
  try {
    Scalar::parse("1/0");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/2x"), ParseError);
}

TEST_CASE("group operation") {
  const auto K = FiniteAbelianGroup::klein();
  CHECK(K.op(GroupElement::parse("(1,0)"), GroupElement::parse("(0,1)")) ==
        GroupElement::parse("(1,1)"));
  const FiniteAbelianGroup Z4({4});
  CHECK(Z4.op(GroupElement{{3}}, GroupElement{{1}}) == GroupElement{{0}});
  for (int g = 0; g < K.order(); ++g) {
    CHECK(K.mul(g, K.identity()) == g);
    CHECK(K.mul(g, K.inv(g)) == K.identity());
  }
  const FiniteAbelianGroup G({2, 3});
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      CHECK(G.mul(g, h) == G.mul(h, g));
      for (int k = 0; k < G.order(); ++k)
        CHECK(G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k)));
    }
  CHECK(G.index(G.element(5)) == 5);
  CHECK(G.name(3) == "(1,0)");
  CHECK_THROWS_AS(K.op(GroupElement{{1}}, GroupElement{{0, 1}}), AlgebraError);
}

TEST_CASE("example bicharacter and cocycle match their formulas") {
  const auto eps = example_epsilon();
  const auto c = example_cocycle();
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      CHECK(eps(g, h) == klein_sign({{0, 1}, {1, 0}}, g, h));
      CHECK(c(g, h) == klein_sign({{0, 1}, {0, 0}}, g, h));
    }
}

TEST_CASE("bicharacter validation") {
  const auto K = FiniteAbelianGroup::klein();
  CHECK_NOTHROW(validate_bicharacter(GroupTable::constant(K, 1)));
  auto bad = table_of(K, [](int g, int h) { return g == 1 && h == 2 ? Scalar(2) : Scalar(1); });
  try {
    validate_bicharacter(bad);
    FAIL("expected E_ANTISYM");
  } catch (const AlgebraError &e) {
    CHECK(e.code() == ErrorCode::Antisym);
  }
  auto zero = table_of(K, [](int g, int) { return g == 3 ? Scalar(0) : Scalar(1); });
  CHECK_THROWS_WITH_AS(validate_bicharacter(zero), doctest::Contains("E_ZERO_VALUE"),
                       AlgebraError);
  // antisymmetric but not bilinear: -1 off the diagonal
  auto nonbilinear = table_of(K, [](int g, int h) { return g != h ? Scalar(-1) : Scalar(1); });
  CHECK_THROWS_WITH_AS(validate_bicharacter(nonbilinear), doctest::Contains("E_BILINEAR"),
                       AlgebraError);
}

TEST_CASE("cocycle validation and normalization") {
  const auto K = FiniteAbelianGroup::klein();
  CHECK_NOTHROW(validate_cocycle(GroupTable::constant(K, 1)));
  auto bad = table_of(K, [](int g, int h) { return g == 2 && h == 2 ? Scalar(-1) : Scalar(1); });
  try {
    validate_cocycle(bad);
    FAIL("expected E_COCYCLE");
  } catch (const AlgebraError &e) {
    CHECK(e.code() == ErrorCode::Cocycle);
    CHECK(e.detail().find("(g,h,k)") != std::string::npos);
  }
  // a constant multiple of a cocycle is normalized back
  auto scaled = table_of(K, [](int g, int h) { return Scalar(3) * example_cocycle()(g, h); });
  const auto c = validate_cocycle(scaled);
  CHECK(c == example_cocycle());
  CHECK(c.normalization() == Scalar(1, 3));
}

TEST_CASE("inverse and product cocycles") {
  const auto c = example_cocycle();
  const auto prod = c.times(c.inverse());
  CHECK(prod == Cocycle::trivial(c.group()));
}

TEST_CASE("bc form") {
  const auto c = example_cocycle();
  const auto B = bc_form(c);
  const auto &G = c.group();
  CHECK(B(G.index(GroupElement{{1, 0}}), G.index(GroupElement{{0, 1}})) == Scalar(-1));
  for (int g = 0; g < 4; ++g) {
    CHECK(B(g, g) == Scalar(1));
    for (int h = 0; h < 4; ++h)
      CHECK(B(g, h) == c(g, h) / c(h, g));
  }
  const auto T = bc_form(Cocycle::trivial(G));
  CHECK(T == GroupTable::constant(G, 1));
}

TEST_CASE("cocycle identities on the example, trivial and random cocycles") {
  auto r = check_cocycle_identities(example_cocycle());
  CHECK(r.passed);
  CHECK(r.cases >= 16 + 256);
  CHECK(check_cocycle_identities(Cocycle::trivial(FiniteAbelianGroup({2, 2, 2}))).passed);
  std::mt19937 rng(7);
  const FiniteAbelianGroup G({2, 2, 2});
  for (int t = 0; t < 5; ++t) {
    ExponentForm f{std::vector<std::vector<int>>(3, std::vector<int>(3)), 2};
    for (auto &row : f.matrix)
      for (auto &e : row)
        e = static_cast<int>(rng() % 2);
    CHECK(check_cocycle_identities(cocycle_from_exponents(G, f)).passed);
  }
  // corrupt the table past validation: the identities must notice
  auto vals = example_cocycle().table().values();
  vals[5] = -vals[5];
  CHECK_FALSE(
      check_cocycle_identities(Cocycle::unchecked(GroupTable(example_cocycle().group(), vals)))
          .passed);
}

TEST_CASE("exponent forms with root order 4") {
  const FiniteAbelianGroup Z4({4});
  const auto eps = bicharacter_from_exponents(Z4, ExponentForm{{{2}}, 4});
  CHECK(eps(1, 1) == Scalar(-1));
  CHECK_THROWS_WITH_AS(table_from_exponents(Z4, ExponentForm{{{1}}, 3}),
                       doctest::Contains("E_UNREPRESENTABLE"), AlgebraError);
  // zeta^(a b) with zeta = i is not well defined on Z2 residues
  CHECK_THROWS_AS(table_from_exponents(FiniteAbelianGroup({2}), ExponentForm{{{1}}, 4}),
                  AlgebraError);
}
