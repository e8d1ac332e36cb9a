#include "colorlie/color_lie.hpp"

#include "colorlie/error.hpp"

namespace colorlie {

ColorLieData ColorLieData::abelian(FiniteAbelianGroup group, Bicharacter eps,
                                   std::vector<BasisElement> basis) {
  ColorLieData d{std::move(group), std::move(eps), std::move(basis), {}};
  d.gamma.assign(d.dim() * d.dim() * d.dim(), Scalar());
  return d;
}

int ColorLieAlgebra::find(const std::string &name) const {
  for (std::size_t i = 0; i < data_.basis.size(); ++i)
    if (data_.basis[i].name == name)
      return static_cast<int>(i);
  return -1;
}

ColorLieAlgebra validate_color_lie(ColorLieData raw) {
  const std::size_t n = raw.dim();
  const auto &G = raw.group;
  if (!(raw.eps.group() == G))
    throw AlgebraError(ErrorCode::GroupMismatch, "bicharacter is defined on another group");
  if (raw.gamma.size() != n * n * n)
    throw AlgebraError(ErrorCode::Invalid, "structure constant table is incomplete");
  for (const auto &b : raw.basis)
    if (b.degree < 0 || b.degree >= G.order())
      throw AlgebraError(ErrorCode::GroupMismatch, "basis degree outside the group");
  auto name = [&](std::size_t i) { return raw.basis[i].name; };
  auto deg = [&](std::size_t i) { return raw.basis[i].degree; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!raw.at(i, j, k).is_zero() && deg(k) != G.mul(deg(i), deg(j)))
          throw AlgebraError(ErrorCode::Gradation,
                             "(" + name(i) + "," + name(j) + "," + name(k) + ")");

  // Color symmetry; with i == j and eps(|x|,|x|) = 1 this also forces <x,x> = 0.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Scalar &e = raw.eps(deg(i), deg(j));
      for (std::size_t k = 0; k < n; ++k)
        if (raw.at(i, j, k) != -(e * raw.at(j, i, k)))
          throw AlgebraError(ErrorCode::ColorSym, "(" + name(i) + "," + name(j) + ")");
    }

  // <x_a, sum_m v_m x_m> as a coordinate vector.
  auto bracket_left = [&](std::size_t a, const std::vector<Scalar> &v) {
    std::vector<Scalar> out(n);
    for (std::size_t m = 0; m < n; ++m) {
      if (v[m].is_zero())
        continue;
      for (std::size_t l = 0; l < n; ++l)
        if (!raw.at(a, m, l).is_zero())
          out[l] += v[m] * raw.at(a, m, l);
    }
    return out;
  };
  auto bracket_basis = [&](std::size_t a, std::size_t b) {
    std::vector<Scalar> out(n);
    for (std::size_t l = 0; l < n; ++l)
      out[l] = raw.at(a, b, l);
    return out;
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto t1 = bracket_left(x, bracket_basis(y, z));
        auto t2 = bracket_left(y, bracket_basis(z, x));
        auto t3 = bracket_left(z, bracket_basis(x, y));
        const Scalar &e1 = raw.eps(deg(z), deg(x));
        const Scalar &e2 = raw.eps(deg(x), deg(y));
        const Scalar &e3 = raw.eps(deg(y), deg(z));
        for (std::size_t l = 0; l < n; ++l)
          if (!(e1 * t1[l] + e2 * t2[l] + e3 * t3[l]).is_zero())
            throw AlgebraError(ErrorCode::Jacobi,
                               "(" + name(x) + "," + name(y) + "," + name(z) + ")");
      }

  ColorLieAlgebra L;
  L.data_ = std::move(raw);
  return L;
}

GroupMorphism::GroupMorphism(FiniteAbelianGroup source, FiniteAbelianGroup target,
                             std::vector<int> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != static_cast<std::size_t>(source_.order()))
    throw AlgebraError(ErrorCode::NotHomomorphism, "morphism table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= target_.order())
      throw AlgebraError(ErrorCode::NotHomomorphism, "morphism value outside target group");
  for (int g = 0; g < source_.order(); ++g)
    for (int h = 0; h < source_.order(); ++h)
      if (table_[source_.mul(g, h)] != target_.mul(table_[g], table_[h]))
        throw AlgebraError(ErrorCode::NotHomomorphism,
                           "phi(gh) != phi(g)phi(h) at (" + source_.name(g) + "," +
                               source_.name(h) + ")");
}

GroupMorphism GroupMorphism::identity(const FiniteAbelianGroup &group) {
  std::vector<int> table(group.order());
  for (int g = 0; g < group.order(); ++g)
    table[g] = g;
  return GroupMorphism(group, group, std::move(table));
}

bool GroupMorphism::is_identity() const {
  if (!(source_ == target_))
    return false;
  for (int g = 0; g < source_.order(); ++g)
    if (table_[g] != g)
      return false;
  return true;
}

void check_compatible(const Bicharacter &eps, const TwistTriple &t) {
  const auto &G = eps.group();
  if (!(t.c.group() == G) || !(t.phi.source() == G))
    throw AlgebraError(ErrorCode::GroupMismatch, "cocycle or morphism not defined on G");
  if (!(t.eps_prime.group() == t.phi.target()))
    throw AlgebraError(ErrorCode::GroupMismatch, "eps' not defined on the target of phi");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (eps(g, h) * t.c(g, h) != t.c(h, g) * t.eps_prime(t.phi(g), t.phi(h)))
        throw AlgebraError(ErrorCode::IncompatibleTriple,
                           "(g,h) = (" + G.name(g) + "," + G.name(h) + ")");
}

ColorLieAlgebra cocycle_twist(const ColorLieAlgebra &L, const TwistTriple &t) {
  check_compatible(L.eps(), t);
  ColorLieData out;
  out.group = t.phi.target();
  out.eps = t.eps_prime;
  out.basis = L.basis();
  for (auto &b : out.basis)
    b.degree = t.phi(b.degree);
  out.gamma = L.data().gamma;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar &scale = t.c(L.degree(i), L.degree(j));
      for (std::size_t k = 0; k < n; ++k)
        out.at(i, j, k) *= scale;
    }
  try {
    return validate_color_lie(std::move(out));
  } catch (const AlgebraError &err) {
    throw AlgebraError(ErrorCode::Invalid,
                       std::string("twisted algebra failed re-validation: ") + err.what());
  }
}

namespace {

ColorLieData sl2_in_a_basis(Bicharacter eps, const Scalar &s12, const Scalar &s23,
                            const Scalar &s31) {
  auto G = FiniteAbelianGroup::klein();
  std::vector<BasisElement> basis = {{"a1", G.index({{1, 0}})},
                                     {"a2", G.index({{0, 1}})},
                                     {"a3", G.index({{1, 1}})}};
  auto d = ColorLieData::abelian(G, eps, std::move(basis));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar &v) {
    d.at(i, j, k) = v;
    d.at(j, i, k) = -(d.eps(d.basis[i].degree, d.basis[j].degree) * v);
  };
  set(0, 1, 2, s12);
  set(1, 2, 0, s23);
  set(2, 0, 1, s31);
  return d;
}

} // namespace

ColorLieAlgebra builtin_algebra(const std::string &name) {
  if (name == "sl2") {
    FiniteAbelianGroup trivial;
    auto d = ColorLieData::abelian(trivial, Bicharacter::trivial(trivial),
                                   {{"e", 0}, {"h", 0}, {"f", 0}});
    // [h,e] = 2e, [e,f] = h, [h,f] = -2f
    d.at(1, 0, 0) = 2;
    d.at(0, 1, 0) = -2;
    d.at(0, 2, 1) = 1;
    d.at(2, 0, 1) = -1;
    d.at(1, 2, 2) = -2;
    d.at(2, 1, 2) = 2;
    return validate_color_lie(std::move(d));
  }
  if (name == "sl2_graded")
    return validate_color_lie(sl2_in_a_basis(Bicharacter::trivial(FiniteAbelianGroup::klein()),
                                             Scalar(-1), Scalar(1), Scalar(1)));
  if (name == "sl2c")
    return validate_color_lie(
        sl2_in_a_basis(example_epsilon(), Scalar(1), Scalar(1), Scalar(1)));
  throw AlgebraError(ErrorCode::Invalid, "unknown builtin algebra '" + name + "'");
}

TwistTriple example_triple() {
  auto G = FiniteAbelianGroup::klein();
  return TwistTriple{example_cocycle(), GroupMorphism::identity(G), example_epsilon()};
}

} // namespace colorlie
