#pragma once

#include "colorlie/color_lie.hpp"
#include "colorlie/matrix.hpp"
#include "colorlie/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace colorlie {

/// rho(x_i) = matrices[i], each dim x dim.
struct Representation {
  ColorLieAlgebra algebra;
  std::size_t dim = 0;
  std::vector<Matrix> matrices;
};

/// R_i R_j - eps(|x_i|,|x_j|) R_j R_i = sum_k gamma_ijk R_k on every pair
/// (E_NOT_REP with the pair and the residual).
CheckReport check_representation(const Representation &r);

/// V_alpha^n with basis e_1..e_n, alpha = (a1, a2) in {1,-1}^2.
Representation make_V(int n, int a1, int a2);
/// W^n for odd n; throws EvenN otherwise.
Representation make_W(int n);
/// Simple sl2-module V(n) on v_0..v_n: e.v_j = (n-j)v_{j+1},
/// f.v_j = j v_{j-1}, h.v_j = (2j-n)v_j.
Representation make_sl2_simple(int n);
/// K^2 (x) V(n) as an sl2^c-module on v_{k,j} (index k*(n+1) + j).  Built
/// from the explicit formulas and cross-checked against gamma_substitute.
Representation make_K2_tensor(int n);
/// K^2 (x) V for an sl2-module V through the images of Gamma.
Representation gamma_substitute(const Representation &sl2_module);

/// Gamma(a_i) as 2x2 matrices over U(sl2) satisfy the sl2^c relations, and
/// substitution of V(n) reproduces make_K2_tensor(n) for n <= n_max.
CheckReport gamma_check(int n_max = 4);

Representation direct_sum(const Representation &r, const Representation &s);
/// Action on the invariant subspace spanned by the columns of `basis`
/// (independent columns).  Throws Invalid when the span is not invariant.
Representation restrict_to(const Representation &r, const Matrix &basis);

/// Basis of {T : T R_i = S_i T for all i}, T of size s.dim x r.dim.
std::vector<Matrix> intertwiner_space(const Representation &r, const Representation &s);
/// Basis of the matrices commuting with every R_i.
std::vector<Matrix> commutant(const Representation &r);
/// Burnside criterion: the R_i generate all dim x dim matrices.
bool is_absolutely_simple(const Representation &r);

/// Catalog entry names: "V3(1,-1)", "W5".
std::string catalog_label(const std::string &kind, int n, int a1 = 1, int a2 = 1);
/// V_alpha^n for alpha in (1,1), (1,-1), (-1,1), (-1,-1), then W^n for odd n.
std::vector<std::pair<std::string, Representation>> catalog(int n);

struct DecompositionFactor {
  std::string label;   // catalog label, or "S<dim>" when unmatched
  Matrix basis;        // columns in the ambient space
  Representation rep;  // action on those columns
};

struct DecompositionReport {
  std::vector<DecompositionFactor> factors;
  Matrix change_of_basis; // factor bases side by side
  std::map<std::string, int> multiplicities;
  /// Labels in catalog order joined by " + ", e.g. "W3 + W3".
  std::string summary() const;
};

/// Meataxe-lite: split along eigenspaces of commutant elements until every
/// piece has a one-dimensional commutant and passes the Burnside test.
/// Throws NotRep, SplitField (no eigenvalue in Q(i) found) or NotSemisimple.
DecompositionReport decompose(const Representation &r, std::uint64_t seed = 0);

struct ExplicitDecomposition {
  CheckReport report;
  std::map<std::string, int> odd_part;  // K^2 (x) V(n-1), odd n only
  std::map<std::string, int> even_part; // K^2 (x) V(2n-1)
};

/// Builds the explicit vectors u_j, u'_j, w_{j,+-}, w'_{j,+-} and checks
/// that the stated assignments are intertwiners and that they span.
ExplicitDecomposition explicit_decomposition(int n);

struct CountRow {
  int n = 0;
  int simple = 0;
  int expected = 0;
};

/// For each n <= n_max: every catalog module is a representation, is
/// absolutely simple, has a one-dimensional endomorphism space and no
/// intertwiners to the others; counts 4 (even n) or 5 (odd n).
CheckReport catalog_counts(int n_max, std::vector<CountRow> *rows = nullptr);

} // namespace colorlie
