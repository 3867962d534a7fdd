#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "qsk/permutation.hpp"
#include "qsk/polynomial.hpp"

namespace qsk {

/// Number of x and y variables in play; q runs over q_1..q_{n-1}.
struct AmbientRank {
  int n;
  explicit AmbientRank(int value);
};

/// The alphabet difference X_k - Y_l; either index may be 0 (empty alphabet).
struct FlaggedDifference {
  int x_flag = 0;
  int y_flag = 0;
};

/// How a Y index is attached to row i in the vexillary double determinant.
enum class YFlagReading {
  ConjugateIndex,  // theta~ at lambda'_i; throws BadFlag when out of range
  RowIndex,        // theta~ at lambda_i
  ClampedConjugate,  // theta~ at min(lambda'_i, length)
};

/// Y index attached to column j in the 321-avoiding double determinant.
enum class ColumnFlagReading {
  RowLengthIndex,  // phi^'_{row length j of sigma(w^-1)}
  DirectIndex,     // phi^'_j
};

/// All quantum constructions. Intermediate results are cached; the caches
/// are guarded, so one engine may serve several threads.
class QuantumEngine {
 public:
  struct Options {
    /// Flips the sign of q_1 in e~_2(X_2), and so in everything built from
    /// the recurrence. Exists to prove that the identity suites can fail.
    bool corrupt_e2 = false;
  };

  QuantumEngine() = default;
  explicit QuantumEngine(Options options) : options_(options) {}
  QuantumEngine(const QuantumEngine&) = delete;
  QuantumEngine& operator=(const QuantumEngine&) = delete;

  const Options& options() const { return options_; }

  // -- Givental-Kim ----------------------------------------------------------

  /// e~_k(X_r) by the three-term recurrence.
  Polynomial q_elementary(int k, int r);
  /// sum_i e~_i(X_k) t^{k-i}.
  Polynomial delta(int k, const Polynomial& t);
  /// The tridiagonal k x k determinant itself (independent of the recurrence).
  Polynomial delta_determinant(int k, const Polynomial& t) const;
  /// prod_{i<n} Delta_i(y_{n-i} | X_i), built from `delta`.
  Polynomial q_w0_double(AmbientRank n);
  /// The same product built from `delta_determinant`.
  Polynomial q_w0_double_determinant(AmbientRank n) const;

  // -- Quantum Schubert polynomials -------------------------------------------

  Polynomial q_double_schubert(const Permutation& w, AmbientRank n);
  std::map<Permutation, Polynomial> q_double_schubert_all(AmbientRank n);
  Polynomial q_schubert(const Permutation& w, AmbientRank n);
  std::map<Permutation, Polynomial> q_schubert_all(AmbientRank n);

  /// Substitutes quantum for classical Schubert polynomials in the Schubert
  /// expansion of f and restricts to rank n (default: largest x index of f).
  Polynomial quantize(const Polynomial& f, std::optional<int> n = std::nullopt);

  // -- Quantum symmetric functions --------------------------------------------

  /// h~_k(X_r) = det(e~_{1-i+j}(X_{r-1+j})).
  Polynomial q_complete(int k, int r);
  /// sum_j e~_{m-j}(X_k) h_j(Y_l).
  Polynomial q_xy_elementary(int m, int k, int l);
  /// sum_j h~_{m-j}(X_k) e_j(Y_l).
  Polynomial q_xy_complete(int m, int k, int l);

  /// det(e~_{lambda'_i-i+j}(X_{r-1+j})) of size n - r. Throws ShapeOutOfBox.
  Polynomial q_schur(const Partition& lambda, int r, AmbientRank n);
  /// det(h~_{lambda_i-i+j}(X_{r+1-j})) of size r.
  Polynomial q_schur_jacobi_trudi(const Partition& lambda, int r);
  /// det(h~_{alpha_i-i+j}(X_i)) of size n. Throws CompositionOutOfBox.
  Polynomial q_monomial(const Composition& alpha, AmbientRank n);
  /// Sum over reduced words a of w and a-compatible b of q_monomial(x^b).
  Polynomial q_bjs(const Permutation& w, AmbientRank n);
  /// Quantum double Schubert polynomial of the Grassmannian permutation of
  /// shape lambda and descent r; y stands for the second alphabet.
  Polynomial q_factorial_schur(const Partition& lambda, int r, AmbientRank n);

  // -- Flagged determinants ---------------------------------------------------

  /// det(h~_{lambda_i-mu_j-i+j}(X_{k_i})), one flag entry per row.
  Polynomial q_flagged_row(const SkewShape& shape, const Flag& flag);
  /// det(e~_{lambda'_i-mu'_j-i+j}(X_{l_j})) of size flag.length() >= lambda_1.
  Polynomial q_flagged_column(const SkewShape& shape, const Flag& flag);
  /// det(h~_{lambda_i-mu_j-i+j}(X_{k_i} - Y_{l_j})): x flag by row, y flag by column.
  Polynomial q_multi_schur(const SkewShape& shape, const std::vector<int>& x_flag,
                           const std::vector<int>& y_flag);
  /// det(h~_{lambda_i-mu_j-i+j}(Z_i)) with one alphabet difference per row.
  Polynomial q_multi_schur_rows(const SkewShape& shape, const std::vector<FlaggedDifference>& rows);

  /// s^q_lambda(X_theta) for any w, flag from `flag_theta` (or `flag`).
  Polynomial q_theta_flagged(const Permutation& w, const std::optional<Flag>& flag = std::nullopt);
  /// Restricted vexillary determinant. Throws NotRestrictedVexillary.
  Polynomial q_rv(const Permutation& w);
  /// Double version with Y flags from theta(w^-1). Throws NotRestrictedVexillary.
  Polynomial q_rv_double(const Permutation& w, YFlagReading reading = YFlagReading::RowIndex);
  /// The row alphabets used by `q_rv_double`.
  std::vector<FlaggedDifference> rv_double_alphabets(const Permutation& w, YFlagReading reading) const;
  /// det(e~_{lambda'_i-i+j}(X_{r-1+j} - Y_{theta~_i})) of size n - r. Throws NotGrassmannian.
  Polynomial q_grassmannian_double(const Permutation& w, AmbientRank n);

  /// Row-flagged determinant of sigma(w) with flag phi^(w).
  Polynomial q_skew_flagged(const Permutation& w);
  /// det(h~_{lambda_i-mu_j-i+j}(X_{phi^_i} - Y_{phi^'(j)})) for 321-avoiding w.
  Polynomial q_skew_double(const Permutation& w, ColumnFlagReading reading);
  std::vector<int> skew_double_y_flag(const Permutation& w, ColumnFlagReading reading) const;

  /// q_schubert(1^m x w) at rank m + rank(w).
  Polynomial stable_approx(const Permutation& w, int m);

 private:
  Options options_;

  std::mutex e_mutex_;
  std::map<std::pair<int, int>, Polynomial> e_cache_;
  std::mutex h_mutex_;
  std::map<std::pair<int, int>, Polynomial> h_cache_;
  std::mutex schubert_mutex_;
  std::map<std::pair<Permutation, int>, Polynomial> double_cache_;
  std::map<std::pair<Permutation, int>, Polynomial> single_cache_;

  Polynomial staircase_product(const Permutation& w, AmbientRank n, bool y_free);
};

/// Process-wide engine with default options.
QuantumEngine& default_engine();

}  // namespace qsk
