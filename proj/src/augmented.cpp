#include "colorlie/augmented.hpp"

#include "colorlie/error.hpp"

#include <set>

namespace colorlie {

namespace {

void add_aug(AugTerms &terms, const AugKey &key, const Scalar &coef) {
  if (coef.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

template <typename Map, typename Key>
void add_into(Map &terms, const Key &key, const Scalar &coef) {
  if (coef.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

} // namespace

AugmentedElement AugmentedEnvelope::generator(std::size_t i) const {
  PbwMonomial m = unit();
  m.at(i) = 1;
  return basis_element(group().identity(), m);
}

AugmentedElement AugmentedEnvelope::basis_element(int g, const PbwMonomial &m,
                                                  const Scalar &coef) const {
  AugmentedElement a;
  add_aug(a.terms, {g, m}, coef);
  return a;
}

AugmentedElement AugmentedEnvelope::embed(const EnvelopingElement &u) const {
  if (!(u.parent() == U_))
    throw AlgebraError(ErrorCode::ParentMismatch, "element of another enveloping algebra");
  AugmentedElement a;
  for (const auto &[m, c] : u.terms())
    add_aug(a.terms, {group().identity(), m}, c);
  return a;
}

AugmentedElement AugmentedEnvelope::add(const AugmentedElement &a,
                                        const AugmentedElement &b) const {
  AugmentedElement out = a;
  for (const auto &[k, c] : b.terms)
    add_aug(out.terms, k, c);
  return out;
}

AugmentedElement AugmentedEnvelope::scale(const AugmentedElement &a, const Scalar &s) const {
  AugmentedElement out;
  for (const auto &[k, c] : a.terms)
    add_aug(out.terms, k, c * s);
  return out;
}

AugmentedElement AugmentedEnvelope::mul(const AugmentedElement &a,
                                        const AugmentedElement &b) const {
  const auto &G = group();
  const auto &eps = U_.algebra().eps();
  AugmentedElement out;
  for (const auto &[ka, ca] : a.terms) {
    const int xdeg = U_.degree(ka.second);
    for (const auto &[kb, cb] : b.terms) {
      Scalar coef = ca * cb * eps(xdeg, kb.first);
      const int gh = G.mul(ka.first, kb.first);
      for (const auto &[m, c] : U_.multiply_monomials(ka.second, kb.second))
        add_aug(out.terms, {gh, m}, coef * c);
    }
  }
  return out;
}

Tensor2 AugmentedEnvelope::tensor_mul(const Tensor2 &a, const Tensor2 &b) const {
  Tensor2 out;
  for (const auto &[ka, ca] : a)
    for (const auto &[kb, cb] : b) {
      AugmentedElement left = mul(basis_element(ka.first.first, ka.first.second),
                                  basis_element(kb.first.first, kb.first.second));
      AugmentedElement right = mul(basis_element(ka.second.first, ka.second.second),
                                   basis_element(kb.second.first, kb.second.second));
      Scalar c = ca * cb;
      for (const auto &[l, cl] : left.terms)
        for (const auto &[r, cr] : right.terms)
          add_into(out, std::make_pair(l, r), c * cl * cr);
    }
  return out;
}

Tensor2 AugmentedEnvelope::coproduct(const AugmentedElement &u) const {
  const auto &G = group();
  const PbwMonomial one_mon = unit();
  Tensor2 out;
  for (const auto &[key, coef] : u.terms) {
    Tensor2 acc;
    acc.emplace(std::make_pair(AugKey{key.first, one_mon}, AugKey{key.first, one_mon}),
                Scalar(1));
    for (int k : U_.letters(key.second)) {
      PbwMonomial x = one_mon;
      x[k] = 1;
      const int h = U_.algebra().degree(k);
      Tensor2 dx;
      dx.emplace(std::make_pair(AugKey{G.identity(), one_mon}, AugKey{G.identity(), x}),
                 Scalar(1));
      dx.emplace(std::make_pair(AugKey{G.identity(), x}, AugKey{h, one_mon}), Scalar(1));
      acc = tensor_mul(acc, dx);
    }
    for (const auto &[k2, c2] : acc)
      add_into(out, k2, coef * c2);
  }
  return out;
}

Scalar AugmentedEnvelope::counit(const AugmentedElement &u) const {
  Scalar out;
  for (const auto &[key, coef] : u.terms)
    if (total_degree(key.second) == 0)
      out += coef;
  return out;
}

AugmentedElement AugmentedEnvelope::antipode(const AugmentedElement &u) const {
  const auto &G = group();
  AugmentedElement out;
  for (const auto &[key, coef] : u.terms) {
    AugmentedElement acc = one();
    auto letters = U_.letters(key.second);
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      const int h = U_.algebra().degree(*it);
      // S(x) = -x h^-1
      AugmentedElement sx = scale(mul(generator(*it), group_element(G.inv(h))), Scalar(-1));
      acc = mul(acc, sx);
    }
    acc = mul(acc, group_element(G.inv(key.first)));
    out = add(out, scale(acc, coef));
  }
  return out;
}

std::vector<AugmentedElement> AugmentedEnvelope::standard_spanning_set() const {
  std::vector<AugmentedElement> out;
  const auto &G = group();
  const std::size_t n = U_.generators();
  for (int g = 0; g < G.order(); ++g)
    out.push_back(group_element(g));
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(mul(group_element(g), generator(i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.push_back(mul(generator(i), generator(j)));
  return out;
}

std::string AugmentedEnvelope::to_string(const AugmentedElement &a) const {
  if (a.terms.empty())
    return "0";
  std::string out;
  for (const auto &[key, coef] : a.terms) {
    if (!out.empty())
      out += " + ";
    std::string c = coef.to_string();
    if (!coef.is_real())
      c = "(" + c + ")";
    out += c + "*" + group().name(key.first) + "#" + U_.monomial_text(key.second);
  }
  return out;
}

CheckReport AugmentedEnvelope::hopf_axiom_check(
    const std::vector<AugmentedElement> &spanning) const {
  CheckReport report{"Hopf axioms"};
  auto apply_left = [&](const Tensor2 &t, auto &&f) {
    AugmentedElement out;
    for (const auto &[k, c] : t)
      out = add(out, f(k.first, k.second, c));
    return out;
  };

  for (std::size_t idx = 0; idx < spanning.size(); ++idx) {
    const auto &u = spanning[idx];
    const std::string label = to_string(u);
    Tensor2 du = coproduct(u);
    const Scalar eu = counit(u);

    ++report.cases;
    auto left_counit = apply_left(du, [&](const AugKey &a, const AugKey &b, const Scalar &c) {
      return scale(basis_element(b.first, b.second), c * counit(basis_element(a.first, a.second)));
    });
    auto right_counit = apply_left(du, [&](const AugKey &a, const AugKey &b, const Scalar &c) {
      return scale(basis_element(a.first, a.second), c * counit(basis_element(b.first, b.second)));
    });
    if (!(left_counit == u) || !(right_counit == u))
      report.fail("E_HOPF_AXIOM", "counit law at " + label);

    ++report.cases;
    auto s_id = apply_left(du, [&](const AugKey &a, const AugKey &b, const Scalar &c) {
      return scale(mul(antipode(basis_element(a.first, a.second)), basis_element(b.first, b.second)),
                   c);
    });
    auto id_s = apply_left(du, [&](const AugKey &a, const AugKey &b, const Scalar &c) {
      return scale(mul(basis_element(a.first, a.second), antipode(basis_element(b.first, b.second))),
                   c);
    });
    AugmentedElement expected = scale(one(), eu);
    if (!(s_id == expected))
      report.fail("E_HOPF_AXIOM", "antipode law m(S(x)id)Delta at " + label);
    if (!(id_s == expected))
      report.fail("E_HOPF_AXIOM", "antipode law m(id(x)S)Delta at " + label);

    ++report.cases;
    Tensor3 left, right;
    for (const auto &[k, c] : du) {
      for (const auto &[k2, c2] : coproduct(basis_element(k.first.first, k.first.second)))
        add_into(left, std::make_tuple(k2.first, k2.second, k.second), c * c2);
      for (const auto &[k2, c2] : coproduct(basis_element(k.second.first, k.second.second)))
        add_into(right, std::make_tuple(k.first, k2.first, k2.second), c * c2);
    }
    if (left != right)
      report.fail("E_HOPF_AXIOM", "coassociativity at " + label);
  }

  for (const auto &u : spanning)
    for (const auto &v : spanning) {
      ++report.cases;
      AugmentedElement uv = mul(u, v);
      if (coproduct(uv) != tensor_mul(coproduct(u), coproduct(v)))
        report.fail("E_HOPF_AXIOM", "Delta not multiplicative on (" + to_string(u) + ", " +
                                        to_string(v) + ")");
      if (counit(uv) != counit(u) * counit(v))
        report.fail("E_HOPF_AXIOM", "counit not multiplicative on (" + to_string(u) + ", " +
                                        to_string(v) + ")");
      if (!(antipode(uv) == mul(antipode(v), antipode(u))))
        report.fail("E_HOPF_AXIOM", "antipode not anti-multiplicative on (" + to_string(u) +
                                        ", " + to_string(v) + ")");
    }
  return report;
}

CheckReport phi_check(const ColorLieAlgebra &L, int d) {
  CheckReport report{"Phi: augmented envelope -> U(L) *_1 G"};
  UniversalEnvelope U(L);
  AugmentedEnvelope Ut(U);
  const auto &G = L.group();
  const auto &eps = L.eps();

  // (x * g-bar)(y * h-bar) = x (g.y) * gh-bar, g.y = eps(g,|y|) y, trivial cocycle.
  auto crossed_mul = [&](const AugTerms &a, const AugTerms &b) {
    AugTerms out;
    for (const auto &[ka, ca] : a)
      for (const auto &[kb, cb] : b) {
        Scalar coef = ca * cb * eps(ka.first, U.degree(kb.second));
        const int gh = G.mul(ka.first, kb.first);
        for (const auto &[m, c] : U.multiply_monomials(ka.second, kb.second))
          add_aug(out, {gh, m}, coef * c);
      }
    return out;
  };
  auto phi = [&](const AugTerms &a) {
    AugTerms out;
    for (const auto &[k, c] : a)
      add_aug(out, k, c * eps(k.first, U.degree(k.second)));
    return out;
  };

  auto monomials = U.basis(d);
  std::set<AugKey> images;
  for (int g = 0; g < G.order(); ++g)
    for (const auto &x : monomials) {
      ++report.cases;
      AugTerms img = phi(Ut.basis_element(g, x).terms);
      if (img.size() != 1 || !images.insert(img.begin()->first).second)
        report.fail("E_PHI", "not bijective at " + G.name(g) + "#" + U.monomial_text(x));
    }

  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (const auto &x : monomials)
        for (const auto &y : monomials) {
          ++report.cases;
          auto gx = Ut.basis_element(g, x);
          auto hy = Ut.basis_element(h, y);
          if (phi(Ut.mul(gx, hy).terms) != crossed_mul(phi(gx.terms), phi(hy.terms))) {
            report.fail("E_PHI", "(" + G.name(g) + "#" + U.monomial_text(x) + ")(" +
                                     G.name(h) + "#" + U.monomial_text(y) + ")");
            return report;
          }
        }
  return report;
}

} // namespace colorlie
