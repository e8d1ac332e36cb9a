#include "colorlie/rep_theory.hpp"

#include "colorlie/enveloping.hpp"
#include "colorlie/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace colorlie {

namespace {

Scalar half(long num) { return Scalar(num, 2); }

// Sparse row from column -> value, dropping zeros.
SparseRow to_row(std::map<std::size_t, Scalar> &entries) {
  SparseRow row;
  for (auto &[c, v] : entries)
    if (!v.is_zero())
      row.emplace_back(c, std::move(v));
  return row;
}

Matrix unflatten(const std::vector<Scalar> &v, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, v);
}

Matrix power(const Matrix &m, int e) {
  Matrix out = Matrix::identity(m.rows());
  for (int k = 0; k < e; ++k)
    out = out * m;
  return out;
}

// rho(u) for u in U(L), monomials read left to right.
Matrix evaluate(const EnvelopingElement &u, const Representation &r) {
  Matrix out(r.dim, r.dim);
  for (const auto &[mon, coef] : u.terms()) {
    Matrix term = Matrix::identity(r.dim);
    for (std::size_t i = 0; i < mon.size(); ++i)
      if (mon[i] > 0)
        term = term * power(r.matrices[i], mon[i]);
    out += term * coef;
  }
  return out;
}

void require_same_algebra(const Representation &r, const Representation &s) {
  if (!(r.algebra == s.algebra))
    throw AlgebraError(ErrorCode::ParentMismatch, "representations of different algebras");
}

using Gamma = std::array<std::array<EnvelopingElement, 2>, 2>;

// Gamma(a_1), Gamma(a_2), Gamma(a_3) over U(sl2).
std::array<Gamma, 3> gamma_images(const UniversalEnvelope &U) {
  const auto &sl2 = U.algebra();
  auto e = U.generator(sl2.find("e"));
  auto h = U.generator(sl2.find("h"));
  auto f = U.generator(sl2.find("f"));
  const auto zero = U.zero();
  const Scalar i2 = Scalar::i() * half(1);
  Gamma g1{{{zero, (e - f) * i2}, {(e - f) * i2, zero}}};
  Gamma g2{{{(e + f) * half(-1), zero}, {zero, (-e - f) * half(-1)}}};
  Gamma g3{{{zero, h * i2}, {-h * i2, zero}}};
  return {g1, g2, g3};
}

Gamma block_mul(const Gamma &a, const Gamma &b) {
  Gamma out = a;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
  return out;
}

// Minimal polynomial of m as monic coefficients (lowest degree first).
std::vector<Scalar> minimal_polynomial(const Matrix &m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Scalar>> powers{Matrix::identity(n).data()};
  Matrix cur = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    cur = cur * m;
    Matrix basis = Matrix::from_columns(powers, n * n);
    Matrix target(n * n, 1, cur.data());
    if (auto x = solve_in_span(basis, target)) {
      std::vector<Scalar> poly;
      for (std::size_t j = 0; j < k; ++j)
        poly.push_back(-(*x)(j, 0));
      poly.emplace_back(1);
      return poly;
    }
    powers.push_back(cur.data());
  }
  throw AlgebraError(ErrorCode::Invalid, "minimal polynomial degree exceeds the dimension");
}

Scalar eval_poly(const std::vector<Scalar> &p, const Scalar &x) {
  Scalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string poly_text(const std::vector<Scalar> &p) {
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k].is_zero())
      continue;
    if (!out.empty())
      out += " + ";
    out += "(" + p[k].to_string() + ")";
    if (k > 0)
      out += "*x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// Continued-fraction convergents of x with bounded denominators.
std::vector<mpq_class> convergents(long double x) {
  std::vector<mpq_class> out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  long double r = x;
  for (int step = 0; step < 24; ++step) {
    const long double a = std::floor(r);
    if (std::fabs(a) > 1e15L)
      break;
    const mpz_class ai(static_cast<long>(a));
    mpz_class h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    if (k0 > 1000000)
      break;
    mpq_class q(h0, k0);
    q.canonicalize();
    out.push_back(q);
    const long double frac = r - a;
    if (std::fabs(frac) < 1e-12L)
      break;
    r = 1.0L / frac;
  }
  return out;
}

// Exact Q(i) roots of p: candidates are `extra` plus rationalized
// numerical roots; each candidate is verified exactly.
std::vector<Scalar> gaussian_roots(const std::vector<Scalar> &p, const std::vector<Scalar> &extra) {
  using C = std::complex<long double>;
  const std::size_t deg = p.size() - 1;
  std::vector<Scalar> candidates = extra;
  if (deg > 0) {
    std::vector<C> coef;
    for (const auto &s : p)
      coef.emplace_back(s.re().get_d(), s.im().get_d());
    auto value = [&](C z) {
      C acc = 0;
      for (std::size_t k = coef.size(); k-- > 0;)
        acc = acc * z + coef[k];
      return acc;
    };
    std::vector<C> z(deg);
    for (std::size_t k = 0; k < deg; ++k)
      z[k] = std::pow(C(0.4L, 0.9L), static_cast<long double>(k));
    for (int iter = 0; iter < 2000; ++iter)
      for (std::size_t k = 0; k < deg; ++k) {
        C denom = 1;
        for (std::size_t j = 0; j < deg; ++j)
          if (j != k)
            denom *= z[k] - z[j];
        if (std::abs(denom) > 0)
          z[k] -= value(z[k]) / denom;
      }
    for (const C &root : z) {
      auto re = convergents(root.real());
      auto im = convergents(root.imag());
      re.emplace_back(0);
      im.emplace_back(0);
      for (const auto &a : re)
        for (const auto &b : im)
          if (std::fabs(a.get_d() - static_cast<double>(root.real())) < 1e-4 &&
              std::fabs(b.get_d() - static_cast<double>(root.imag())) < 1e-4)
            candidates.emplace_back(a, b);
    }
  }
  std::vector<Scalar> roots;
  for (const auto &cand : candidates)
    if (eval_poly(p, cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
      roots.push_back(cand);
  return roots;
}

struct CatalogMatch {
  std::string label;
  int rank = 1 << 20;
};

CatalogMatch match_catalog(const Representation &leaf) {
  static const ColorLieAlgebra sl2c = builtin_algebra("sl2c");
  if (!(leaf.algebra == sl2c))
    return {"S" + std::to_string(leaf.dim)};
  int idx = 0;
  for (const auto &[label, rep] : catalog(static_cast<int>(leaf.dim))) {
    if (intertwiner_space(leaf, rep).size() == 1)
      return {label, static_cast<int>(leaf.dim) * 8 + idx};
    ++idx;
  }
  return {"S" + std::to_string(leaf.dim)};
}

// Basis of the center of the algebra spanned by `comm`.
std::vector<Matrix> commutant_center(const std::vector<Matrix> &comm) {
  const std::size_t k = comm.size();
  if (k <= 1)
    return comm;
  const std::size_t n = comm[0].rows();
  SparseEchelon ech(k);
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Matrix> brackets;
    for (std::size_t a = 0; a < k; ++a)
      brackets.push_back(comm[a] * comm[b] - comm[b] * comm[a]);
    for (std::size_t e = 0; e < n * n; ++e) {
      std::vector<Scalar> row(k);
      for (std::size_t a = 0; a < k; ++a)
        row[a] = brackets[a].data()[e];
      ech.insert(to_sparse(row));
    }
  }
  std::vector<Matrix> out;
  for (const auto &t : ech.nullspace()) {
    Matrix z(n, n);
    for (std::size_t a = 0; a < k; ++a)
      if (!t[a].is_zero())
        z += comm[a] * t[a];
    out.push_back(std::move(z));
  }
  return out;
}

struct Piece {
  Matrix basis; // ambient coordinates
  Representation rep;
};

void split(const Piece &piece, std::mt19937_64 &rng, std::vector<Piece> &leaves) {
  const auto &r = piece.rep;
  auto comm = commutant(r);
  if (comm.size() == 1) {
    if (!is_absolutely_simple(r))
      throw AlgebraError(ErrorCode::NotSemisimple,
                         "indecomposable summand of dimension " + std::to_string(r.dim) +
                             " is not simple");
    leaves.push_back(piece);
    return;
  }

  // Splits off the submodule spanned by the columns of `sub` together with
  // an invariant complement, found as an equivariant projection
  // P = sum t_k C_k with P S = S and Q P = 0 (rows of Q annihilate S).
  auto split_along = [&](const Matrix &sub) {
    Matrix q = kernel_basis(sub.transpose()).transpose();
    const std::size_t eqs = r.dim * sub.cols() + q.rows() * r.dim;
    Matrix system(eqs, comm.size());
    std::vector<Scalar> rhs(eqs);
    for (std::size_t k = 0; k < comm.size(); ++k) {
      Matrix cs = comm[k] * sub;
      Matrix qc = q * comm[k];
      std::size_t row = 0;
      for (const auto &v : cs.data())
        system(row++, k) = v;
      for (const auto &v : qc.data())
        system(row++, k) = v;
    }
    for (std::size_t k = 0; k < sub.data().size(); ++k)
      rhs[k] = sub.data()[k];
    auto t = solve_linear(system, rhs);
    if (!t)
      throw AlgebraError(ErrorCode::NotSemisimple,
                         "submodule of dimension " + std::to_string(sub.cols()) +
                             " has no invariant complement");
    Matrix p(r.dim, r.dim);
    for (std::size_t k = 0; k < comm.size(); ++k)
      p += comm[k] * (*t)[k];
    Matrix rest = kernel_basis(p);
    split({piece.basis * sub, restrict_to(r, sub)}, rng, leaves);
    split({piece.basis * rest, restrict_to(r, rest)}, rng, leaves);
  };

  std::string last_poly;
  auto try_eigenspace = [&](const Matrix &x) {
    if (x.is_scalar())
      return false;
    auto poly = minimal_polynomial(x);
    std::vector<Scalar> extra{Scalar(0)};
    for (std::size_t k = 0; k < r.dim; ++k)
      extra.push_back(x(k, k));
    auto roots = gaussian_roots(poly, extra);
    if (roots.empty()) {
      last_poly = poly_text(poly);
      return false;
    }
    split_along(kernel_basis(x - Matrix::identity(r.dim) * roots.front()));
    return true;
  };
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_element = [&](const std::vector<Matrix> &span) {
    Matrix m(r.dim, r.dim);
    for (const auto &c : span)
      m += c * Scalar(coef(rng));
    return m;
  };

  // Central elements come first: their eigenvalues are rational whenever
  // the isotypic components are, so they separate non-isomorphic summands.
  auto center = commutant_center(comm);
  if (center.size() > 1) {
    for (const auto &z : center)
      if (try_eigenspace(z))
        return;
    for (int k = 0; k < 8; ++k)
      if (try_eigenspace(random_element(center)))
        return;
  }
  for (const auto &c : comm)
    if (try_eigenspace(c))
      return;

  // An isotypic piece S^m with commutant M_m(K): embed a catalog module of
  // dimension dim/m directly.
  static const ColorLieAlgebra sl2c = builtin_algebra("sl2c");
  const auto m = static_cast<std::size_t>(std::llround(std::sqrt(double(comm.size()))));
  if (r.algebra == sl2c && center.size() == 1 && m * m == comm.size() && r.dim % m == 0) {
    for (const auto &entry : catalog(static_cast<int>(r.dim / m))) {
      auto maps = intertwiner_space(entry.second, r);
      if (!maps.empty()) {
        split_along(maps.front());
        return;
      }
    }
  }

  for (std::size_t a = 0; a < comm.size() && a < 8; ++a)
    for (std::size_t b = 0; b < comm.size() && b < 8; ++b)
      if (a != b && try_eigenspace(comm[a] * comm[b]))
        return;
  for (int k = 0; k < 32; ++k)
    if (try_eigenspace(random_element(comm)))
      return;
  throw AlgebraError(ErrorCode::SplitField,
                     "no commutant element has an eigenvalue in Q(i); last minimal polynomial " +
                         last_poly);
}

} // namespace

CheckReport check_representation(const Representation &r) {
  CheckReport report("representation");
  const auto &L = r.algebra;
  if (r.matrices.size() != L.dim())
    throw AlgebraError(ErrorCode::Invalid, "one matrix per basis element is required");
  for (const auto &m : r.matrices)
    if (m.rows() != r.dim || m.cols() != r.dim)
      throw AlgebraError(ErrorCode::Invalid, "matrices must be dim x dim");
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      ++report.cases;
      Matrix lhs = r.matrices[i] * r.matrices[j] - r.matrices[j] * r.matrices[i] * L.eps_basis(i, j);
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!L.structure(i, j, k).is_zero())
          lhs -= r.matrices[k] * L.structure(i, j, k);
      if (!lhs.is_zero())
        report.fail("E_NOT_REP", "(" + L.basis()[i].name + "," + L.basis()[j].name +
                                     ") residual\n" + lhs.to_string());
    }
  return report;
}

Representation make_V(int n, int a1, int a2) {
  if (n < 1 || (a1 != 1 && a1 != -1) || (a2 != 1 && a2 != -1))
    throw AlgebraError(ErrorCode::Invalid, "V needs n >= 1 and alpha in {1,-1}^2");
  const std::size_t d = static_cast<std::size_t>(n);
  Matrix r1(d, d), r2(d, d), r3(d, d);
  // Column j-1 holds the image of e_j.
  for (int j = 1; j <= n; ++j) {
    const std::size_t c = static_cast<std::size_t>(j - 1);
    const Scalar s = sign_power(j - 1) * half(a1);
    if (j < n) {
      r1(c + 1, c) = s * Scalar(2 * n - j);
      r2(c + 1, c) = half(-(2 * n - j));
    } else {
      r1(c, c) = s * Scalar(a2 * n);
      r2(c, c) = half(-a2 * n);
    }
    if (j > 1) {
      r1(c - 1, c) = -s * Scalar(j - 1);
      r2(c - 1, c) = half(-(j - 1));
    }
    r3(c, c) = sign_power(j) * half(a1) * Scalar(2 * n - 2 * j + 1);
  }
  return {builtin_algebra("sl2c"), d, {r1, r2, r3}};
}

Representation make_W(int n) {
  if (n < 1 || n % 2 == 0)
    throw AlgebraError(ErrorCode::EvenN, "W^n is defined for odd n only, got " + std::to_string(n));
  const std::size_t d = static_cast<std::size_t>(n);
  Matrix r1(d, d), r2(d, d), r3(d, d);
  for (int j = 1; j <= n; ++j) {
    const std::size_t c = static_cast<std::size_t>(j - 1);
    if (j < n) {
      r1(c + 1, c) = sign_power(j - 1) * half(n - j);
      r2(c + 1, c) = half(-(n - j));
    }
    if (j > 1) {
      r1(c - 1, c) = -sign_power(j - 1) * half(j - 1);
      r2(c - 1, c) = half(-(j - 1));
    }
    r3(c, c) = sign_power(j) * half(n - 2 * j + 1);
  }
  return {builtin_algebra("sl2c"), d, {r1, r2, r3}};
}

Representation make_sl2_simple(int n) {
  if (n < 0)
    throw AlgebraError(ErrorCode::Invalid, "V(n) needs n >= 0");
  const auto L = builtin_algebra("sl2");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  Matrix e(d, d), h(d, d), f(d, d);
  for (int j = 0; j <= n; ++j) {
    const std::size_t c = static_cast<std::size_t>(j);
    if (j < n)
      e(c + 1, c) = n - j;
    if (j > 0)
      f(c - 1, c) = j;
    h(c, c) = 2 * j - n;
  }
  std::vector<Matrix> mats(3);
  mats[L.find("e")] = e;
  mats[L.find("h")] = h;
  mats[L.find("f")] = f;
  return {L, d, mats};
}

Representation gamma_substitute(const Representation &sl2_module) {
  UniversalEnvelope U(sl2_module.algebra);
  auto gammas = gamma_images(U);
  const std::size_t d = sl2_module.dim;
  Representation out{builtin_algebra("sl2c"), 2 * d, {}};
  for (const auto &g : gammas) {
    Matrix m(2 * d, 2 * d);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        m.set_block(r * d, c * d, evaluate(g[r][c], sl2_module));
    out.matrices.push_back(std::move(m));
  }
  return out;
}

Representation make_K2_tensor(int n) {
  if (n < 0)
    throw AlgebraError(ErrorCode::Invalid, "K^2 (x) V(n) needs n >= 0");
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  auto idx = [&](int k, int j) { return static_cast<std::size_t>(k % 2) * d + j; };
  Matrix r1(2 * d, 2 * d), r2(2 * d, 2 * d), r3(2 * d, 2 * d);
  const Scalar i2 = Scalar::i() * half(1);
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j <= n; ++j) {
      const std::size_t c = idx(k, j);
      if (j < n) {
        r1(idx(k + 1, j + 1), c) += i2 * Scalar(n - j);
        r2(idx(k, j + 1), c) += half(-1) * sign_power(k) * Scalar(n - j);
      }
      if (j > 0) {
        r1(idx(k + 1, j - 1), c) += -i2 * Scalar(j);
        r2(idx(k, j - 1), c) += half(-1) * sign_power(k) * Scalar(j);
      }
      r3(idx(k + 1, j), c) += i2 * sign_power(k) * Scalar(n - 2 * j);
    }
  Representation out{builtin_algebra("sl2c"), 2 * d, {r1, r2, r3}};
  auto via_gamma = gamma_substitute(make_sl2_simple(n));
  if (via_gamma.matrices != out.matrices)
    throw AlgebraError(ErrorCode::Invalid,
                       "K^2 (x) V(" + std::to_string(n) + ") disagrees with Gamma substitution");
  return out;
}

CheckReport gamma_check(int n_max) {
  CheckReport report("Gamma: U(sl2^c) -> M_2(U(sl2))");
  UniversalEnvelope U(builtin_algebra("sl2"));
  const auto L = builtin_algebra("sl2c");
  auto g = gamma_images(U);
  const char *names[] = {"a1", "a2", "a3"};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      ++report.cases;
      Gamma ij = block_mul(g[i], g[j]);
      Gamma ji = block_mul(g[j], g[i]);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          EnvelopingElement residual = ij[r][c] - ji[r][c] * L.eps_basis(i, j);
          for (std::size_t k = 0; k < 3; ++k)
            residual -= g[k][r][c] * L.structure(i, j, k);
          if (!residual.is_zero())
            report.fail("E_GAMMA", std::string("relation (") + names[i] + "," + names[j] +
                                       ") entry (" + std::to_string(r) + "," + std::to_string(c) +
                                       "): " + residual.to_string());
        }
    }
  for (int n = 0; n <= n_max; ++n) {
    ++report.cases;
    try {
      make_K2_tensor(n);
    } catch (const AlgebraError &err) {
      report.fail("E_GAMMA", err.detail());
    }
  }
  return report;
}

Representation direct_sum(const Representation &r, const Representation &s) {
  require_same_algebra(r, s);
  Representation out{r.algebra, r.dim + s.dim, {}};
  for (std::size_t i = 0; i < r.matrices.size(); ++i)
    out.matrices.push_back(r.matrices[i].direct_sum(s.matrices[i]));
  return out;
}

Representation restrict_to(const Representation &r, const Matrix &basis) {
  Representation out{r.algebra, basis.cols(), {}};
  for (const auto &m : r.matrices) {
    auto x = solve_in_span(basis, m * basis);
    if (!x)
      throw AlgebraError(ErrorCode::Invalid, "subspace is not invariant");
    out.matrices.push_back(std::move(*x));
  }
  return out;
}

std::vector<Matrix> intertwiner_space(const Representation &r, const Representation &s) {
  require_same_algebra(r, s);
  const std::size_t n = r.dim, m = s.dim;
  if (n == 0 || m == 0)
    return {};
  // Unknown T(a,b) at a*n + b; equation (a,c) of generator i:
  // sum_b T(a,b) R(b,c) - sum_b S(a,b) T(b,c) = 0.
  SparseEchelon ech(m * n);
  for (std::size_t i = 0; i < r.matrices.size(); ++i) {
    const Matrix &R = r.matrices[i];
    const Matrix &S = s.matrices[i];
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        std::map<std::size_t, Scalar> row;
        for (std::size_t b = 0; b < n; ++b)
          if (!R(b, c).is_zero())
            row[a * n + b] += R(b, c);
        for (std::size_t b = 0; b < m; ++b)
          if (!S(a, b).is_zero())
            row[b * n + c] -= S(a, b);
        auto sparse = to_row(row);
        if (!sparse.empty())
          ech.insert(std::move(sparse));
      }
  }
  std::vector<Matrix> out;
  for (auto &v : ech.nullspace())
    out.push_back(unflatten(v, m, n));
  return out;
}

std::vector<Matrix> commutant(const Representation &r) { return intertwiner_space(r, r); }

bool is_absolutely_simple(const Representation &r) {
  const std::size_t d = r.dim;
  if (d == 0)
    return false;
  const std::size_t full = d * d;
  SparseEchelon span(full);
  std::vector<Matrix> queue{Matrix::identity(d)};
  span.insert(to_sparse(queue.front().data()));
  for (std::size_t next = 0; next < queue.size() && span.rank() < full; ++next)
    for (const auto &g : r.matrices) {
      Matrix m = g * queue[next];
      if (span.insert(to_sparse(m.data())))
        queue.push_back(std::move(m));
      if (span.rank() == full)
        break;
    }
  return span.rank() == full;
}

std::string catalog_label(const std::string &kind, int n, int a1, int a2) {
  if (kind == "W")
    return "W" + std::to_string(n);
  return "V" + std::to_string(n) + "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
}

std::vector<std::pair<std::string, Representation>> catalog(int n) {
  std::vector<std::pair<std::string, Representation>> out;
  for (auto [a1, a2] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
    out.emplace_back(catalog_label("V", n, a1, a2), make_V(n, a1, a2));
  if (n % 2 == 1)
    out.emplace_back(catalog_label("W", n), make_W(n));
  return out;
}

std::string DecompositionReport::summary() const {
  std::string out;
  for (const auto &f : factors)
    out += (out.empty() ? "" : " + ") + f.label;
  return out;
}

DecompositionReport decompose(const Representation &r, std::uint64_t seed) {
  auto check = check_representation(r);
  if (!check.passed)
    throw AlgebraError(ErrorCode::NotRep, check.witness);
  DecompositionReport out;
  if (r.dim == 0)
    return out;

  std::mt19937_64 rng(seed);
  std::vector<Piece> leaves;
  split({Matrix::identity(r.dim), r}, rng, leaves);

  std::vector<std::pair<CatalogMatch, Piece>> matched;
  for (auto &leaf : leaves)
    matched.emplace_back(match_catalog(leaf.rep), std::move(leaf));
  std::stable_sort(matched.begin(), matched.end(),
                   [](const auto &a, const auto &b) { return a.first.rank < b.first.rank; });

  Matrix basis(r.dim, 0);
  Representation blocks{r.algebra, 0, std::vector<Matrix>(r.matrices.size())};
  for (auto &[match, piece] : matched) {
    basis = basis.hstack(piece.basis);
    blocks = blocks.dim == 0 ? piece.rep : direct_sum(blocks, piece.rep);
    ++out.multiplicities[match.label];
    out.factors.push_back({match.label, std::move(piece.basis), std::move(piece.rep)});
  }
  out.change_of_basis = basis;

  auto inv = inverse(basis);
  if (!inv)
    throw AlgebraError(ErrorCode::Invalid, "factor bases do not span the module");
  for (std::size_t i = 0; i < r.matrices.size(); ++i)
    if (!(*inv * r.matrices[i] * basis == blocks.matrices[i]))
      throw AlgebraError(ErrorCode::Invalid, "change of basis does not block-diagonalize");
  return out;
}

ExplicitDecomposition explicit_decomposition(int n) {
  if (n < 1)
    throw AlgebraError(ErrorCode::Invalid, "explicit decomposition needs n >= 1");
  ExplicitDecomposition out{CheckReport("explicit decompositions of K^2 (x) V(m)"), {}, {}};
  const Scalar i = Scalar::i();

  // u_j = v_{0,j} + i(-1)^{j+1} v_{1,j}, u'_j = v_{0,j} + i(-1)^j v_{1,j}
  auto u_vectors = [&](int m, bool primed) {
    const std::size_t d = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<Scalar>> vs;
    for (int j = 0; j <= m; ++j) {
      std::vector<Scalar> v(2 * d);
      v[j] = 1;
      v[d + j] = i * sign_power(primed ? j : j + 1);
      vs.push_back(std::move(v));
    }
    return vs;
  };
  auto combine = [](const std::vector<Scalar> &a, const std::vector<Scalar> &b, const Scalar &s) {
    std::vector<Scalar> v = a;
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] += b[k] * s;
    return v;
  };

  // J has the images of e_1..e_dim as columns; checks R J = J S.
  auto verify = [&](const Representation &ambient, const Matrix &J, const Representation &target,
                    const std::string &what, std::map<std::string, int> &tally,
                    const std::string &label) {
    ++out.report.cases;
    for (std::size_t a = 0; a < ambient.matrices.size(); ++a)
      if (!(ambient.matrices[a] * J == J * target.matrices[a])) {
        out.report.fail("E_INTERTWINER", what + " is not an intertwiner onto " + label);
        return;
      }
    if (rank(J) != target.dim) {
      out.report.fail("E_INTERTWINER", what + " is not injective");
      return;
    }
    ++tally[label];
  };

  if (n % 2 == 1) {
    const auto ambient = make_K2_tensor(n - 1);
    const auto W = make_W(n);
    auto u = u_vectors(n - 1, false);
    auto up = u_vectors(n - 1, true);
    std::vector<std::vector<Scalar>> cols_u(n), cols_up(n);
    for (int j = 0; j < n; ++j) {
      cols_u[j] = u[j];          // u_j -> e_{j+1}
      cols_up[n - 1 - j] = up[j]; // u'_j -> e_{n-j}
    }
    Matrix Ju = Matrix::from_columns(cols_u, ambient.dim);
    Matrix Jup = Matrix::from_columns(cols_up, ambient.dim);
    verify(ambient, Ju, W, "u_j -> e_{j+1}", out.odd_part, catalog_label("W", n));
    verify(ambient, Jup, W, "u'_j -> e_{n-j}", out.odd_part, catalog_label("W", n));
    ++out.report.cases;
    if (rank(Ju.hstack(Jup)) != ambient.dim)
      out.report.fail("E_INTERTWINER", "U + U' is not all of K^2 (x) V(" + std::to_string(n - 1) + ")");
  }

  {
    const int m = 2 * n - 1;
    const auto ambient = make_K2_tensor(m);
    auto u = u_vectors(m, false);
    auto up = u_vectors(m, true);
    Matrix all(ambient.dim, 0);
    struct Part {
      const std::vector<std::vector<Scalar>> *vecs;
      int sign;
      int a1, a2;
      const char *name;
    };
    for (const Part &part : {Part{&u, 1, 1, 1, "w_{j,+}"}, Part{&u, -1, 1, -1, "w_{j,-}"},
                             Part{&up, 1, -1, 1, "w'_{j,+}"}, Part{&up, -1, -1, -1, "w'_{j,-}"}}) {
      std::vector<std::vector<Scalar>> cols;
      for (int j = 0; j < n; ++j)
        cols.push_back(combine((*part.vecs)[j], (*part.vecs)[m - j], Scalar(part.sign)));
      Matrix J = Matrix::from_columns(cols, ambient.dim);
      verify(ambient, J, make_V(n, part.a1, part.a2), std::string(part.name) + " -> e_{j+1}",
             out.even_part, catalog_label("V", n, part.a1, part.a2));
      all = all.hstack(J);
    }
    ++out.report.cases;
    if (rank(all) != ambient.dim)
      out.report.fail("E_INTERTWINER", "the four pieces do not span K^2 (x) V(" + std::to_string(m) + ")");
  }
  return out;
}

CheckReport catalog_counts(int n_max, std::vector<CountRow> *rows) {
  CheckReport report("catalog counts");
  if (n_max < 1)
    throw AlgebraError(ErrorCode::Invalid, "n_max must be at least 1");
  for (int n = 1; n <= n_max; ++n) {
    auto cat = catalog(n);
    CountRow row{n, 0, n % 2 == 0 ? 4 : 5};
    for (std::size_t a = 0; a < cat.size(); ++a) {
      const auto &[label, rep] = cat[a];
      ++report.cases;
      bool ok = check_representation(rep).passed && is_absolutely_simple(rep) &&
                intertwiner_space(rep, rep).size() == 1;
      for (std::size_t b = 0; b < cat.size() && ok; ++b)
        if (b != a && !intertwiner_space(rep, cat[b].second).empty()) {
          report.fail("E_COUNT", label + " is isomorphic to " + cat[b].first);
          ok = false;
        }
      if (!ok)
        report.fail("E_COUNT", label + " is not an absolutely simple representation");
      row.simple += ok ? 1 : 0;
    }
    if (row.simple != row.expected || static_cast<int>(cat.size()) != row.expected)
      report.fail("E_COUNT", "dimension " + std::to_string(n) + ": " + std::to_string(row.simple) +
                                 " simple modules, expected " + std::to_string(row.expected));
    if (rows)
      rows->push_back(row);
  }
  return report;
}

} // namespace colorlie
