#pragma once

#include <map>
#include <vector>

#include "qsk/permutation.hpp"
#include "qsk/polynomial.hpp"

namespace qsk {

// -- Divided differences -----------------------------------------------------

/// (f - s_i f) / (v_i - v_{i+1}) in the given family, computed monomial by
/// monomial. Q is rejected.
Polynomial divided_diff(const Polynomial& f, int i, Family family = Family::X);

/// Applies the operators of `word` right to left: a_p first, a_1 last.
Polynomial divided_diff_word(const Polynomial& f, const Word& word, Family family = Family::X);

/// The composite operator of w, along `reduced_word(w)`.
Polynomial divided_diff_w(const Polynomial& f, const Permutation& w, Family family = Family::X);

// -- Schubert polynomials ----------------------------------------------------

/// Classical Schubert polynomial in x, via the dominant permutation above w.
Polynomial schubert(const Permutation& w);

/// Same polynomial, straight from the staircase monomial of rank(w).
Polynomial schubert_via_staircase(const Permutation& w);

/// Double Schubert polynomial with (x_i + y_j) factors at the top.
Polynomial double_schubert(const Permutation& w);

/// Every S_w for w in S_n.
std::map<Permutation, Polynomial> schubert_all(int n);
std::map<Permutation, Polynomial> double_schubert_all(int n);

// -- Symmetric functions -----------------------------------------------------

/// e_k(v_1..v_r). Zero for k < 0 or k > r.
Polynomial elementary(int k, int r, Family family = Family::X);
/// h_k(v_1..v_r). Zero for k < 0, and for k > 0 when r = 0.
Polynomial complete(int k, int r, Family family = Family::X);
/// s_lambda(X_r) by the Jacobi-Trudi determinant in h.
Polynomial schur(const Partition& lambda, int r);
/// det(h_{lambda_i - mu_j - i + j}(X_{flag_i})). Throws BadFlag unless the
/// flag has one entry per row of the outer shape.
Polynomial flagged_schur(const SkewShape& shape, const Flag& flag, Family family = Family::X);

// -- Schubert basis ----------------------------------------------------------

struct SchubertExpansion {
  /// Keyed by trimmed permutations; zero coefficients are not stored.
  std::map<Permutation, Integer> coefficients;

  Polynomial reconstruct() const;
};

/// Coefficients (d_w f)(0) for every w with nonzero contribution.
/// Throws ForeignVariables if f involves y or q.
SchubertExpansion schubert_expand(const Polynomial& f);

}  // namespace qsk
