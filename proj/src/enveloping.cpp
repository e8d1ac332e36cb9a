#include "colorlie/enveloping.hpp"

#include "colorlie/error.hpp"
#include "colorlie/matrix.hpp"

#include <mutex>

namespace colorlie {

void add_term(PbwTerms &terms, const PbwMonomial &mon, const Scalar &coef) {
  if (coef.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(mon, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

int total_degree(const PbwMonomial &m) {
  int d = 0;
  for (int e : m)
    d += e;
  return d;
}

namespace detail {

struct EnvelopeImpl {
  explicit EnvelopeImpl(ColorLieAlgebra L) : algebra(std::move(L)) {
    const std::size_t n = algebra.dim();
    odd.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      odd[i] = algebra.eps_basis(i, i) == Scalar(-1);
  }

  ColorLieAlgebra algebra;
  std::vector<bool> odd;

  mutable std::mutex mutex;
  mutable std::map<std::pair<PbwMonomial, int>, PbwTerms> gen_cache;
  mutable std::map<std::pair<PbwMonomial, PbwMonomial>, PbwTerms> mon_cache;

  // Normal form of m * x_k for a normal monomial m.
  PbwTerms times_generator(const PbwMonomial &m, int k) const {
    {
      std::lock_guard lock(mutex);
      auto it = gen_cache.find({m, k});
      if (it != gen_cache.end())
        return it->second;
    }
    PbwTerms out = compute_times_generator(m, k);
    const int bound = total_degree(m) + 1;
    for (const auto &[mon, coef] : out)
      if (total_degree(mon) > bound)
        throw AlgebraError(ErrorCode::Termination, "straightening increased total degree");
    std::lock_guard lock(mutex);
    gen_cache.emplace(std::make_pair(m, k), out);
    return out;
  }

  PbwTerms terms_times_generator(const PbwTerms &terms, int k) const {
    PbwTerms out;
    for (const auto &[mon, coef] : terms)
      for (const auto &[m2, c2] : times_generator(mon, k))
        add_term(out, m2, coef * c2);
    return out;
  }

  PbwTerms compute_times_generator(const PbwMonomial &m, int k) const {
    const int n = static_cast<int>(m.size());
    int last = -1;
    for (int i = n - 1; i >= 0; --i)
      if (m[i] > 0) {
        last = i;
        break;
      }
    PbwTerms out;
    if (last < k || (last == k && !odd[k])) {
      PbwMonomial next = m;
      ++next[k];
      out.emplace(std::move(next), Scalar(1));
      return out;
    }
    PbwMonomial rest = m;
    --rest[last];
    if (last == k) {
      // x x = (1/2)<x,x> for eps(|x|,|x|) = -1.
      for (int l = 0; l < n; ++l) {
        const Scalar &g = algebra.structure(k, k, l);
        if (g.is_zero())
          continue;
        Scalar half = g * Scalar(1, 2);
        for (const auto &[mon, coef] : times_generator(rest, l))
          add_term(out, mon, half * coef);
      }
      return out;
    }
    // x_last x_k = eps(|x_last|,|x_k|) x_k x_last + <x_last, x_k>.
    const Scalar &e = algebra.eps_basis(last, k);
    for (const auto &[mon, coef] : terms_times_generator(times_generator(rest, k), last))
      add_term(out, mon, e * coef);
    for (int l = 0; l < n; ++l) {
      const Scalar &g = algebra.structure(last, k, l);
      if (g.is_zero())
        continue;
      for (const auto &[mon, coef] : times_generator(rest, l))
        add_term(out, mon, g * coef);
    }
    return out;
  }

  const PbwTerms &times_monomial(const PbwMonomial &m1, const PbwMonomial &m2) const {
    {
      std::lock_guard lock(mutex);
      auto it = mon_cache.find({m1, m2});
      if (it != mon_cache.end())
        return it->second;
    }
    PbwTerms acc;
    acc.emplace(m1, Scalar(1));
    for (std::size_t k = 0; k < m2.size(); ++k)
      for (int r = 0; r < m2[k]; ++r)
        acc = terms_times_generator(acc, static_cast<int>(k));
    std::lock_guard lock(mutex);
    return mon_cache.emplace(std::make_pair(m1, m2), std::move(acc)).first->second;
  }
};

} // namespace detail

UniversalEnvelope::UniversalEnvelope(ColorLieAlgebra L)
    : impl_(std::make_shared<detail::EnvelopeImpl>(std::move(L))) {}

const ColorLieAlgebra &UniversalEnvelope::algebra() const { return impl_->algebra; }

EnvelopingElement UniversalEnvelope::zero() const { return EnvelopingElement(impl_, {}); }

EnvelopingElement UniversalEnvelope::one() const { return scalar(Scalar(1)); }

EnvelopingElement UniversalEnvelope::scalar(const Scalar &s) const {
  PbwTerms t;
  add_term(t, PbwMonomial(generators(), 0), s);
  return EnvelopingElement(impl_, std::move(t));
}

EnvelopingElement UniversalEnvelope::generator(std::size_t i) const {
  if (i >= generators())
    throw AlgebraError(ErrorCode::Invalid, "generator index out of range");
  PbwMonomial m(generators(), 0);
  m[i] = 1;
  return monomial(m);
}

EnvelopingElement UniversalEnvelope::monomial(const PbwMonomial &m, const Scalar &coef) const {
  if (m.size() != generators() || !is_normal(m))
    throw AlgebraError(ErrorCode::Invalid, "not a normal PBW monomial");
  PbwTerms t;
  add_term(t, m, coef);
  return EnvelopingElement(impl_, std::move(t));
}

EnvelopingElement UniversalEnvelope::word(std::span<const int> letters) const {
  PbwTerms acc;
  acc.emplace(PbwMonomial(generators(), 0), Scalar(1));
  for (int k : letters) {
    if (k < 0 || static_cast<std::size_t>(k) >= generators())
      throw AlgebraError(ErrorCode::Invalid, "generator index out of range");
    acc = impl_->terms_times_generator(acc, k);
  }
  return EnvelopingElement(impl_, std::move(acc));
}

EnvelopingElement UniversalEnvelope::from_terms(PbwTerms terms) const {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != generators() || !is_normal(it->first))
      throw AlgebraError(ErrorCode::Invalid, "not a normal PBW monomial");
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  return EnvelopingElement(impl_, std::move(terms));
}

const PbwTerms &UniversalEnvelope::multiply_monomials(const PbwMonomial &m1,
                                                      const PbwMonomial &m2) const {
  return impl_->times_monomial(m1, m2);
}

bool UniversalEnvelope::is_normal(const PbwMonomial &m) const {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 || (impl_->odd[i] && m[i] > 1))
      return false;
  return true;
}

int UniversalEnvelope::degree(const PbwMonomial &m) const {
  const auto &G = algebra().group();
  int g = G.identity();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int r = 0; r < m[i]; ++r)
      g = G.mul(g, algebra().degree(i));
  return g;
}

std::vector<int> UniversalEnvelope::letters(const PbwMonomial &m) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int r = 0; r < m[i]; ++r)
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<PbwMonomial> UniversalEnvelope::basis(int d) const {
  const std::size_t n = generators();
  std::vector<PbwMonomial> out;
  for (int total = 0; total <= d; ++total) {
    std::vector<PbwMonomial> level;
    PbwMonomial cur(n, 0);
    // Distributes `left` over positions i..n-1.
    auto rec = [&](auto &&self, std::size_t i, int left) -> void {
      if (i == n) {
        if (left == 0)
          level.push_back(cur);
        return;
      }
      int cap = impl_->odd[i] ? std::min(left, 1) : left;
      for (int e = cap; e >= 0; --e) {
        cur[i] = e;
        self(self, i + 1, left - e);
      }
      cur[i] = 0;
    };
    rec(rec, 0, total);
    if (n == 0 && total == 0)
      level.push_back(cur);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string UniversalEnvelope::monomial_text(const PbwMonomial &m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += algebra().basis()[i].name;
    if (m[i] > 1)
      out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

Scalar EnvelopingElement::coefficient(const PbwMonomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::map<int, EnvelopingElement> EnvelopingElement::homogeneous_components() const {
  std::map<int, EnvelopingElement> out;
  UniversalEnvelope U(parent_);
  for (const auto &[mon, coef] : terms_) {
    int g = U.degree(mon);
    auto it = out.try_emplace(g, EnvelopingElement(parent_, {})).first;
    add_term(it->second.terms_, mon, coef);
  }
  return out;
}

std::optional<int> EnvelopingElement::homogeneous_degree() const {
  auto comps = homogeneous_components();
  if (comps.size() != 1)
    return std::nullopt;
  return comps.begin()->first;
}

void EnvelopingElement::same_parent(const EnvelopingElement &o) const {
  if (parent_ != o.parent_)
    throw AlgebraError(ErrorCode::ParentMismatch, "elements of different enveloping algebras");
}

EnvelopingElement &EnvelopingElement::operator+=(const EnvelopingElement &o) {
  same_parent(o);
  for (const auto &[mon, coef] : o.terms_)
    add_term(terms_, mon, coef);
  return *this;
}

EnvelopingElement &EnvelopingElement::operator-=(const EnvelopingElement &o) {
  same_parent(o);
  for (const auto &[mon, coef] : o.terms_)
    add_term(terms_, mon, -coef);
  return *this;
}

EnvelopingElement &EnvelopingElement::operator*=(const Scalar &s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[mon, coef] : terms_)
    coef *= s;
  return *this;
}

EnvelopingElement EnvelopingElement::operator-() const {
  EnvelopingElement out = *this;
  return out *= Scalar(-1);
}

EnvelopingElement operator*(const EnvelopingElement &a, const EnvelopingElement &b) {
  a.same_parent(b);
  PbwTerms out;
  for (const auto &[m1, c1] : a.terms_)
    for (const auto &[m2, c2] : b.terms_) {
      Scalar c = c1 * c2;
      for (const auto &[m, c3] : a.parent_->times_monomial(m1, m2))
        add_term(out, m, c * c3);
    }
  return EnvelopingElement(a.parent_, std::move(out));
}

std::string EnvelopingElement::to_string() const {
  if (terms_.empty())
    return "0";
  UniversalEnvelope U(parent_);
  std::string out;
  for (const auto &[mon, coef] : terms_) {
    if (!out.empty())
      out += " + ";
    bool unit = total_degree(mon) == 0;
    std::string c = coef.to_string();
    if (!coef.is_real())
      c = "(" + c + ")";
    if (unit)
      out += c;
    else if (coef.is_one())
      out += U.monomial_text(mon);
    else
      out += c + "*" + U.monomial_text(mon);
  }
  return out;
}

EnvelopingElement twisted_mul(const EnvelopingElement &a, const EnvelopingElement &b,
                              const Cocycle &c) {
  UniversalEnvelope U = a.parent();
  if (!(U == b.parent()))
    throw AlgebraError(ErrorCode::ParentMismatch, "elements of different enveloping algebras");
  if (!(U.algebra().group() == c.group()))
    throw AlgebraError(ErrorCode::GroupMismatch, "cocycle is not defined on the grading group");
  PbwTerms out;
  for (const auto &[m1, c1] : a.terms()) {
    const int g = U.degree(m1);
    for (const auto &[m2, c2] : b.terms()) {
      Scalar coef = c1 * c2 * c(g, U.degree(m2));
      for (const auto &[m, c3] : U.multiply_monomials(m1, m2))
        add_term(out, m, coef * c3);
    }
  }
  return U.from_terms(std::move(out));
}

CheckReport theta_check(const ColorLieAlgebra &L, const TwistTriple &t, int d) {
  CheckReport report{"Theta: U(L^c) -> U(L)^c"};
  ColorLieAlgebra Lc = cocycle_twist(L, t);
  UniversalEnvelope U(L);
  UniversalEnvelope Uc(Lc);
  const Cocycle &c = t.c;

  std::map<PbwMonomial, EnvelopingElement> cache;
  auto theta_mon = [&](const PbwMonomial &m) -> const EnvelopingElement & {
    auto it = cache.find(m);
    if (it != cache.end())
      return it->second;
    EnvelopingElement acc = U.one();
    for (int k : Uc.letters(m))
      acc = twisted_mul(acc, U.generator(k), c);
    return cache.emplace(m, std::move(acc)).first->second;
  };
  auto theta = [&](const EnvelopingElement &x) {
    EnvelopingElement out = U.zero();
    for (const auto &[m, coef] : x.terms())
      out += coef * theta_mon(m);
    return out;
  };

  // Defining relations of U(L^c) map to zero.
  const std::size_t n = Lc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++report.cases;
      EnvelopingElement xi = U.generator(i), xj = U.generator(j);
      EnvelopingElement lhs =
          twisted_mul(xi, xj, c) - Lc.eps_basis(i, j) * twisted_mul(xj, xi, c);
      EnvelopingElement bracket = Uc.zero();
      for (std::size_t k = 0; k < n; ++k)
        bracket += Lc.structure(i, j, k) * Uc.generator(k);
      if (lhs != theta(bracket))
        report.fail("E_THETA", "generator relation (" + Lc.basis()[i].name + "," +
                                   Lc.basis()[j].name + ")");
    }

  auto basis = Uc.basis(d);
  for (const auto &m1 : basis)
    for (const auto &m2 : basis) {
      ++report.cases;
      EnvelopingElement lhs = theta(Uc.monomial(m1) * Uc.monomial(m2));
      EnvelopingElement rhs = twisted_mul(theta_mon(m1), theta_mon(m2), c);
      if (lhs != rhs) {
        report.fail("E_THETA", "pair (" + Uc.monomial_text(m1) + ", " + Uc.monomial_text(m2) +
                                   ")");
        return report;
      }
    }

  // Images of the PBW basis are linearly independent.
  auto target_basis = U.basis(d);
  std::map<PbwMonomial, std::size_t> column;
  for (std::size_t i = 0; i < target_basis.size(); ++i)
    column[target_basis[i]] = i;
  SparseEchelon ech(target_basis.size());
  for (const auto &m : basis) {
    std::vector<Scalar> v(target_basis.size());
    for (const auto &[mon, coef] : theta_mon(m).terms())
      v[column.at(mon)] = coef;
    if (!ech.insert(to_sparse(v)))
      report.fail("E_THETA", "image of " + Uc.monomial_text(m) + " is linearly dependent");
  }
  return report;
}

} // namespace colorlie
