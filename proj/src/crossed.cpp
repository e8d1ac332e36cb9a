#include "colorlie/crossed.hpp"

#include "colorlie/error.hpp"

#include <random>

namespace colorlie {

namespace {

std::string vec_text(const std::vector<Scalar> &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i].to_string();
  return out + "]";
}

void add_cp(CrossedProductElement &x, int i, int g, const Scalar &coef) {
  if (coef.is_zero())
    return;
  auto [it, inserted] = x.terms.try_emplace({i, g}, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero())
      x.terms.erase(it);
  }
}

void require_shape(const AssocAlgebra &A) {
  const std::size_t n = A.dim();
  if (A.mult.size() != n * n * n || A.unit.size() != n)
    throw AlgebraError(ErrorCode::Invalid, "structure constants have the wrong size");
  if (A.grading && A.grading->degrees.size() != n)
    throw AlgebraError(ErrorCode::Invalid, "grading has the wrong number of degrees");
}

AssocAlgebra empty_algebra(std::vector<std::string> names) {
  AssocAlgebra A;
  const std::size_t n = names.size();
  A.names = std::move(names);
  A.mult.assign(n * n * n, Scalar(0));
  A.unit.assign(n, Scalar(0));
  return A;
}

} // namespace

std::vector<Scalar> AssocAlgebra::product(const std::vector<Scalar> &a,
                                          const std::vector<Scalar> &b) const {
  const std::size_t n = dim();
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero())
        continue;
      const Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &m = at(i, j, k);
        if (!m.is_zero())
          out[k] += ab * m;
      }
    }
  }
  return out;
}

std::vector<Scalar> AssocAlgebra::basis_vector(std::size_t i) const {
  std::vector<Scalar> v(dim());
  v.at(i) = 1;
  return v;
}

CheckReport check_assoc_algebra(const AssocAlgebra &A) {
  require_shape(A);
  CheckReport report("associative algebra");
  const std::size_t n = A.dim();
  std::vector<std::vector<Scalar>> e;
  for (std::size_t i = 0; i < n; ++i)
    e.push_back(A.basis_vector(i));

  for (std::size_t i = 0; i < n; ++i) {
    ++report.cases;
    if (A.product(A.unit, e[i]) != e[i] || A.product(e[i], A.unit) != e[i])
      report.fail("E_NOT_ASSOCIATIVE", "unit fails at " + A.names[i]);
  }
  if (A.grading) {
    const auto &G = A.grading->group;
    const auto &deg = A.grading->degrees;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!A.at(i, j, k).is_zero() && deg[k] != G.mul(deg[i], deg[j]))
            report.fail("E_GRADATION", A.names[i] + "*" + A.names[j] + " has a component on " +
                                           A.names[k]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = A.product(e[i], e[j]);
      for (std::size_t k = 0; k < n; ++k) {
        ++report.cases;
        if (A.product(ij, e[k]) != A.product(e[i], A.product(e[j], e[k]))) {
          report.fail("E_NOT_ASSOCIATIVE",
                      "(" + A.names[i] + "," + A.names[j] + "," + A.names[k] + ")");
          return report;
        }
      }
    }
  return report;
}

CheckReport check_algebra_map(const Matrix &f, const AssocAlgebra &source,
                              const AssocAlgebra &target, const std::string &code) {
  CheckReport report("algebra map");
  if (f.cols() != source.dim() || f.rows() != target.dim())
    throw AlgebraError(ErrorCode::Invalid, "map has the wrong shape");
  ++report.cases;
  if (f.apply(source.unit) != target.unit)
    report.fail(code, "unit not preserved");
  std::vector<std::vector<Scalar>> images;
  for (std::size_t i = 0; i < source.dim(); ++i)
    images.push_back(f.column(i));
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      ++report.cases;
      auto lhs = f.apply(source.product(source.basis_vector(i), source.basis_vector(j)));
      if (lhs != target.product(images[i], images[j])) {
        report.fail(code, "not multiplicative on (" + source.names[i] + ", " + source.names[j] +
                              "): " + vec_text(lhs) + " vs " +
                              vec_text(target.product(images[i], images[j])));
        return report;
      }
    }
  return report;
}

CheckReport check_action(const AssocAlgebra &A, const GroupAction &action) {
  CheckReport report("group action");
  const auto &G = action.group;
  if (action.matrices.size() != static_cast<std::size_t>(G.order()))
    throw AlgebraError(ErrorCode::Invalid, "one action matrix per group element is required");
  for (const auto &m : action.matrices)
    if (m.rows() != A.dim() || m.cols() != A.dim())
      throw AlgebraError(ErrorCode::Invalid, "action matrix has the wrong shape");

  ++report.cases;
  if (!(action.matrices[G.identity()] == Matrix::identity(A.dim())))
    report.fail("E_NOT_HOMOMORPHISM", "identity does not act trivially");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      ++report.cases;
      if (!(action.matrices[g] * action.matrices[h] == action.matrices[G.mul(g, h)]))
        report.fail("E_NOT_HOMOMORPHISM", G.name(g) + "." + G.name(h));
    }
  for (int g = 0; g < G.order(); ++g) {
    auto sub = check_algebra_map(action.matrices[g], A, A, "E_NOT_HOMOMORPHISM");
    report.cases += sub.cases;
    if (!sub.passed)
      report.fail(sub.code, G.name(g) + " is not an automorphism: " + sub.witness);
  }
  return report;
}

AssocAlgebra ground_field() {
  AssocAlgebra A = empty_algebra({"1"});
  A.at(0, 0, 0) = 1;
  A.unit[0] = 1;
  return A;
}

AssocAlgebra group_algebra(const FiniteAbelianGroup &G) {
  return twisted_group_ring(Cocycle::trivial(G));
}

AssocAlgebra twisted_group_ring(const Cocycle &c) {
  const auto &G = c.group();
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (int g = 0; g < G.order(); ++g) {
    names.push_back("u" + G.name(g));
    degrees.push_back(g);
  }
  AssocAlgebra A = empty_algebra(std::move(names));
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      A.at(g, h, G.mul(g, h)) = c(g, h);
  // u_e acts as c(e,e) = 1 after normalization; the unit is u_e / c(e,e).
  A.unit[G.identity()] = c(G.identity(), G.identity()).inverse();
  A.grading = Grading{G, std::move(degrees)};
  return A;
}

AssocAlgebra matrix_algebra(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
  AssocAlgebra A = empty_algebra(std::move(names));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c)
        A.at(r * n + k, k * n + c, r * n + c) = 1;
  for (std::size_t r = 0; r < n; ++r)
    A.unit[r * n + r] = 1;
  return A;
}

AssocAlgebra tensor_product(const AssocAlgebra &A, const AssocAlgebra &B) {
  require_shape(A);
  require_shape(B);
  const std::size_t na = A.dim(), nb = B.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      names.push_back(A.names[i] + "(x)" + B.names[j]);
  AssocAlgebra T = empty_algebra(std::move(names));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t p = 0; p < na; ++p) {
        const Scalar &a = A.at(i, k, p);
        if (a.is_zero())
          continue;
        for (std::size_t j = 0; j < nb; ++j)
          for (std::size_t l = 0; l < nb; ++l)
            for (std::size_t q = 0; q < nb; ++q) {
              const Scalar &b = B.at(j, l, q);
              if (!b.is_zero())
                T.at(i * nb + j, k * nb + l, p * nb + q) = a * b;
            }
      }
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      T.unit[i * nb + j] = A.unit[i] * B.unit[j];
  if (A.grading && B.grading) {
    const auto &H = B.grading->group;
    Grading gr{FiniteAbelianGroup::product(A.grading->group, H), {}};
    for (std::size_t i = 0; i < na; ++i)
      for (std::size_t j = 0; j < nb; ++j)
        gr.degrees.push_back(A.grading->degrees[i] * H.order() + B.grading->degrees[j]);
    T.grading = std::move(gr);
  }
  return T;
}

AssocAlgebra cocycle_twist(const AssocAlgebra &A, const Cocycle &c) {
  require_shape(A);
  if (!A.grading)
    throw AlgebraError(ErrorCode::Invalid, "cocycle twist needs a graded algebra");
  if (!(A.grading->group == c.group()))
    throw AlgebraError(ErrorCode::GroupMismatch, "cocycle lives on a different group");
  const auto &deg = A.grading->degrees;
  AssocAlgebra T = A;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (std::size_t k = 0; k < A.dim(); ++k)
        T.at(i, j, k) = A.at(i, j, k) * c(deg[i], deg[j]);
  // The unit sits in degree e and c(e, g) = c(e, e) = 1, so it survives.
  return T;
}

CrossedProduct::CrossedProduct(AssocAlgebra base, GroupAction action, Cocycle c)
    : CrossedProduct(std::move(base), std::move(action), std::move(c), true) {}

CrossedProduct CrossedProduct::unchecked(AssocAlgebra base, GroupAction action, Cocycle c) {
  return CrossedProduct(std::move(base), std::move(action), std::move(c), false);
}

CrossedProduct::CrossedProduct(AssocAlgebra base, GroupAction action, Cocycle c, bool validate)
    : base_(std::move(base)), action_(std::move(action)), c_(std::move(c)) {
  require_shape(base_);
  if (!(action_.group == c_.group()))
    throw AlgebraError(ErrorCode::GroupMismatch, "action and cocycle use different groups");
  if (action_.matrices.size() != static_cast<std::size_t>(group().order()))
    throw AlgebraError(ErrorCode::Invalid, "one action matrix per group element is required");
  if (!validate)
    return;
  auto assoc = check_assoc_algebra(base_);
  if (!assoc.passed)
    throw AlgebraError(ErrorCode::NotAssociative, assoc.witness);
  auto act = check_action(base_, action_);
  if (!act.passed)
    throw AlgebraError(ErrorCode::NotHomomorphism, act.witness);
}

CrossedProductElement CrossedProduct::basis_element(int i, int g, const Scalar &coef) const {
  CrossedProductElement x;
  add_cp(x, i, g, coef);
  return x;
}

CrossedProductElement CrossedProduct::mul(const CrossedProductElement &x,
                                          const CrossedProductElement &y) const {
  const std::size_t n = base_.dim();
  const auto &G = group();
  CrossedProductElement out;
  for (const auto &[kx, cx] : x.terms)
    for (const auto &[ky, cy] : y.terms) {
      const auto [i, g] = kx;
      const auto [j, h] = ky;
      const Scalar coef = cx * cy * c_(g, h);
      const int gh = G.mul(g, h);
      const Matrix &act = action_.matrices[g];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &gb = act(k, j);
        if (gb.is_zero())
          continue;
        for (std::size_t l = 0; l < n; ++l) {
          const Scalar &m = base_.at(i, k, l);
          if (!m.is_zero())
            add_cp(out, static_cast<int>(l), gh, coef * gb * m);
        }
      }
    }
  return out;
}

AssocAlgebra CrossedProduct::as_algebra() const {
  const auto &G = group();
  const std::size_t n = base_.dim();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (int g = 0; g < G.order(); ++g)
      names.push_back(base_.names[i] + "*" + G.name(g));
  AssocAlgebra A = empty_algebra(std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (int g = 0; g < G.order(); ++g)
      for (std::size_t j = 0; j < n; ++j)
        for (int h = 0; h < G.order(); ++h) {
          auto p = mul(basis_element(static_cast<int>(i), g), basis_element(static_cast<int>(j), h));
          for (const auto &[k, coef] : p.terms)
            A.at(index(static_cast<int>(i), g), index(static_cast<int>(j), h),
                 index(k.first, k.second)) = coef;
        }
  const Scalar ce = c_(G.identity(), G.identity()).inverse();
  for (std::size_t i = 0; i < n; ++i)
    A.unit[index(static_cast<int>(i), G.identity())] = base_.unit[i] * ce;
  return A;
}

CheckReport check_crossed_module(const CrossedProduct &A, const CrossedModule &W) {
  CheckReport report("crossed-product module");
  const auto &base = A.base();
  const auto &G = A.group();
  const std::size_t d = W.dim();
  if (W.base_generators.size() != base.dim() ||
      W.group_generators.size() != static_cast<std::size_t>(G.order()))
    throw AlgebraError(ErrorCode::Invalid, "module needs one matrix per generator");
  for (const auto *set : {&W.base_generators, &W.group_generators})
    for (const auto &m : *set)
      if (m.rows() != d || m.cols() != d)
        throw AlgebraError(ErrorCode::Invalid, "module matrices must be square of equal size");

  auto combo = [&](const std::vector<Scalar> &coefs) {
    Matrix out(d, d);
    for (std::size_t k = 0; k < coefs.size(); ++k)
      if (!coefs[k].is_zero())
        out += W.base_generators[k] * coefs[k];
    return out;
  };
  const Matrix I = Matrix::identity(d);

  ++report.cases;
  if (!(combo(base.unit) == I))
    report.fail("E_NOT_REP", "unit of A_e does not act as the identity");
  ++report.cases;
  if (!(W.group_generators[G.identity()] == I))
    report.fail("E_NOT_REP", "e-bar does not act as the identity");
  for (std::size_t i = 0; i < base.dim(); ++i)
    for (std::size_t j = 0; j < base.dim(); ++j) {
      ++report.cases;
      auto prod = base.product(base.basis_vector(i), base.basis_vector(j));
      if (!(W.base_generators[i] * W.base_generators[j] == combo(prod)))
        report.fail("E_NOT_REP", base.names[i] + "*" + base.names[j]);
    }
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      ++report.cases;
      if (!(W.group_generators[g] * W.group_generators[h] ==
            W.group_generators[G.mul(g, h)] * A.cocycle()(g, h)))
        report.fail("E_NOT_REP", G.name(g) + "-bar * " + G.name(h) + "-bar");
    }
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t j = 0; j < base.dim(); ++j) {
      ++report.cases;
      auto moved = combo(A.action().matrices[g].column(j));
      if (!(W.group_generators[g] * W.base_generators[j] == moved * W.group_generators[g]))
        report.fail("E_NOT_REP", G.name(g) + "-bar * " + base.names[j]);
    }
  return report;
}

Matrix averaging_projector(const CrossedProduct &A, const CrossedModule &W, const Matrix &V,
                           const Matrix &p_e) {
  require(check_crossed_module(A, W));
  const std::size_t d = W.dim();
  if (V.rows() != d || p_e.rows() != d || p_e.cols() != d)
    throw AlgebraError(ErrorCode::Invalid, "projector or subspace has the wrong size");
  const std::size_t r = rank(V);

  auto is_projection_onto_v = [&](const Matrix &p) {
    return p * p == p && p * V == V && rank(p) == r;
  };
  if (!is_projection_onto_v(p_e))
    throw AlgebraError(ErrorCode::NotAeEquiv, "p_e is not a projection onto V");
  for (std::size_t i = 0; i < W.base_generators.size(); ++i) {
    const Matrix &a = W.base_generators[i];
    if (!(a * p_e == p_e * a))
      throw AlgebraError(ErrorCode::NotAeEquiv,
                         "p_e does not commute with " + A.base().names[i]);
  }

  const auto &G = A.group();
  Matrix p(d, d);
  for (int g = 0; g < G.order(); ++g) {
    const int gi = G.inv(g);
    Matrix term = W.group_generators[g] * p_e * W.group_generators[gi];
    p += term * A.cocycle()(g, gi).inverse();
  }
  p *= Scalar(1, G.order());

  if (!is_projection_onto_v(p))
    throw AlgebraError(ErrorCode::NotEquiv, "averaged map is not a projection onto V");
  for (const auto *set : {&W.base_generators, &W.group_generators})
    for (const auto &m : *set)
      if (!(m * p == p * m))
        throw AlgebraError(ErrorCode::NotEquiv, "averaged map is not A-linear");
  return p;
}

PsiResult psi_iso(const AssocAlgebra &A, const Cocycle &c) {
  require_shape(A);
  if (!A.grading || !(A.grading->group == c.group()))
    throw AlgebraError(ErrorCode::GroupMismatch, "A must be graded by the cocycle's group");
  const auto &G = c.group();
  const auto &deg = A.grading->degrees;
  const std::size_t n = A.dim();
  const std::size_t order = static_cast<std::size_t>(G.order());

  AssocAlgebra Ac = cocycle_twist(A, c);
  GroupAction action{G, {}};
  for (int g = 0; g < G.order(); ++g) {
    std::vector<Scalar> diag;
    for (std::size_t i = 0; i < n; ++i)
      diag.push_back(c(g, deg[i]) / c(deg[i], g));
    action.matrices.push_back(Matrix::diagonal(diag));
  }
  // Not validated here: a corrupted cocycle must surface as E_PSI below.
  auto X = CrossedProduct::unchecked(Ac, action, c);

  PsiResult out{X.as_algebra(), tensor_product(twisted_group_ring(c), A),
                Matrix(n * order, n * order), Matrix(n * order, n * order),
                CheckReport("Psi: A^c *_c G -> KG^c (x) A")};
  auto y_index = [&](int g, std::size_t i) { return static_cast<std::size_t>(g) * n + i; };
  for (std::size_t i = 0; i < n; ++i)
    for (int g = 0; g < G.order(); ++g) {
      const int a = deg[i];
      out.psi(y_index(G.mul(a, g), i), X.index(static_cast<int>(i), g)) = c(a, g);
      const int shifted = G.mul(G.inv(a), g);
      out.psi_inverse(X.index(static_cast<int>(i), shifted), y_index(g, i)) =
          c(a, shifted).inverse();
    }

  const Matrix I = Matrix::identity(n * order);
  ++out.report.cases;
  if (!(out.psi * out.psi_inverse == I))
    out.report.fail("E_PSI", "Psi o Psi^-1 is not the identity");
  ++out.report.cases;
  if (!(out.psi_inverse * out.psi == I))
    out.report.fail("E_PSI", "Psi^-1 o Psi is not the identity");
  auto mult = check_algebra_map(out.psi, out.domain, out.codomain, "E_PSI");
  out.report.cases += mult.cases;
  if (!mult.passed)
    out.report.fail(mult.code, mult.witness);
  return out;
}

EpsTensorResult eps_tensor(const AssocAlgebra &A, const AssocAlgebra &B, const Bicharacter &eps) {
  require_shape(A);
  require_shape(B);
  if (!A.grading || !B.grading || !(A.grading->group == B.grading->group) ||
      !(A.grading->group == eps.group()))
    throw AlgebraError(ErrorCode::GroupMismatch, "both factors must be graded by eps's group");
  const auto &G = eps.group();
  const std::size_t nb = B.dim();
  AssocAlgebra plain = tensor_product(A, B);

  EpsTensorResult out{plain, CheckReport("eps-tensor product vs cocycle twist")};
  auto &T = out.algebra;
  const auto &da = A.grading->degrees;
  const auto &db = B.grading->degrees;
  for (std::size_t x = 0; x < T.dim(); ++x)
    for (std::size_t y = 0; y < T.dim(); ++y) {
      const Scalar s = eps(db[x % nb], da[y / nb]);
      for (std::size_t z = 0; z < T.dim(); ++z)
        T.at(x, y, z) = plain.at(x, y, z) * s;
    }

  // c((g,h),(g',h')) = eps(h,g') on G x G.
  const auto &GG = T.grading->group;
  std::vector<Scalar> values;
  for (int u = 0; u < GG.order(); ++u)
    for (int v = 0; v < GG.order(); ++v)
      values.push_back(eps(u % G.order(), v / G.order()));
  Cocycle c = validate_cocycle(GroupTable(GG, std::move(values)));
  AssocAlgebra twisted = cocycle_twist(plain, c);

  for (std::size_t x = 0; x < T.dim(); ++x)
    for (std::size_t y = 0; y < T.dim(); ++y) {
      ++out.report.cases;
      for (std::size_t z = 0; z < T.dim(); ++z)
        if (T.at(x, y, z) != twisted.at(x, y, z))
          out.report.fail("E_EPS_TENSOR", "(" + T.names[x] + ")(" + T.names[y] + ")");
    }
  ++out.report.cases;
  if (T.unit != twisted.unit)
    out.report.fail("E_EPS_TENSOR", "units differ");
  return out;
}

FIsoResult f_iso() {
  const Cocycle c = example_cocycle();
  const auto &G = c.group();
  auto m2 = [](long a, long b, long d, long e) {
    return Matrix(2, 2, {Scalar(a), Scalar(b), Scalar(d), Scalar(e)});
  };
  FIsoResult out;
  out.report = CheckReport("F: KG^c -> M_2(K)");
  out.images.resize(4);
  out.images[G.index({{0, 0}})] = m2(1, 0, 0, 1);
  out.images[G.index({{1, 0}})] = m2(0, 1, 1, 0);
  out.images[G.index({{0, 1}})] = m2(1, 0, 0, -1);
  out.images[G.index({{1, 1}})] = m2(0, 1, -1, 0);

  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      ++out.report.cases;
      if (!(out.images[g] * out.images[h] == out.images[G.mul(g, h)] * c(g, h)))
        out.report.fail("E_F_ISO", "F(u" + G.name(g) + ")F(u" + G.name(h) + ")");
    }
  Matrix flat(4, 4);
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t k = 0; k < 4; ++k)
      flat(k, g) = out.images[g].data()[k];
  ++out.report.cases;
  if (rank(flat) != 4)
    out.report.fail("E_F_ISO", "images are linearly dependent");
  auto alg = check_algebra_map(flat, twisted_group_ring(c), matrix_algebra(2), "E_F_ISO");
  out.report.cases += alg.cases;
  if (!alg.passed)
    out.report.fail(alg.code, alg.witness);
  return out;
}

KleinModuleFixture klein_module_fixture() {
  const Cocycle c = example_cocycle();
  const auto &G = c.group();
  CrossedProduct A(ground_field(), GroupAction{G, std::vector<Matrix>(G.order(), Matrix::identity(1))},
                   c);
  CrossedModule W;
  W.base_generators = {Matrix::identity(4)};
  for (const auto &m : f_iso().images)
    W.group_generators.push_back(m.direct_sum(m));
  Matrix V(4, 2);
  V(0, 0) = 1;
  V(1, 1) = 1;
  return {std::move(A), std::move(W), std::move(V)};
}

Matrix random_nonequivariant_projection(std::uint64_t seed) {
  const auto fixture = klein_module_fixture();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  while (true) {
    Matrix p = Matrix::identity(2).direct_sum(Matrix(2, 2));
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 2; c < 4; ++c)
        p(r, c) = Scalar(num(rng), den(rng));
    for (const auto &g : fixture.module.group_generators)
      if (!(g * p == p * g))
        return p;
  }
}

} // namespace colorlie
