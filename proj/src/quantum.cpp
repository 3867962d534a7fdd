#include "qsk/quantum.hpp"

#include <deque>

#include "qsk/determinant.hpp"
#include "qsk/schubert.hpp"

namespace qsk {

AmbientRank::AmbientRank(int value) : n(value) {
  if (value < 1) throw Error(ErrorCode::InvalidArgument, "ambient rank must be positive");
  if (value >= kMaxIndex) throw Error(ErrorCode::CapacityExceeded, "ambient rank exceeds variable capacity");
}

QuantumEngine& default_engine() {
  static QuantumEngine engine;
  return engine;
}

namespace {

Permutation fit_rank(const Permutation& w, AmbientRank n) {
  if (w.rank() > n.n) {
    throw Error(ErrorCode::RankMismatch, w.to_string() + " does not live in S_" + std::to_string(n.n));
  }
  return w.padded(n.n);
}

template <class Key>
std::optional<Polynomial> lookup(std::mutex& m, const std::map<Key, Polynomial>& cache, const Key& key) {
  std::lock_guard lock(m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return std::nullopt;
}

template <class Key>
Polynomial store(std::mutex& m, std::map<Key, Polynomial>& cache, const Key& key, Polynomial value) {
  std::lock_guard lock(m);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// Givental-Kim

Polynomial QuantumEngine::q_elementary(int k, int r) {
  if (k < 0 || k > r) return Polynomial();
  if (k == 0) return Polynomial(1LL);
  const std::pair key{k, r};
  if (auto hit = lookup(e_mutex_, e_cache_, key)) return *hit;
  Polynomial value;
  if (options_.corrupt_e2 && k == 2 && r == 2) {
    value = Polynomial::x(1) * Polynomial::x(2) - Polynomial::q(1);
  } else {
    value = q_elementary(k, r - 1) + Polynomial::x(r) * q_elementary(k - 1, r - 1);
    if (r >= 2) value += Polynomial::q(r - 1) * q_elementary(k - 2, r - 2);
  }
  return store(e_mutex_, e_cache_, key, std::move(value));
}

Polynomial QuantumEngine::delta(int k, const Polynomial& t) {
  Polynomial out;
  Polynomial power(1LL);
  for (int i = k; i >= 0; --i) {
    out += q_elementary(i, k) * power;
    power *= t;
  }
  return out;
}

Polynomial QuantumEngine::delta_determinant(int k, const Polynomial& t) const {
  return determinant(k, [&](int i, int j) -> Polynomial {
    if (i == j) return Polynomial::x(i) + t;
    if (j == i + 1) return Polynomial::q(i);
    if (j == i - 1) return Polynomial(-1LL);
    return Polynomial();
  });
}

Polynomial QuantumEngine::q_w0_double(AmbientRank n) {
  Polynomial out(1LL);
  for (int i = 1; i < n.n; ++i) out *= delta(i, Polynomial::y(n.n - i));
  return out;
}

Polynomial QuantumEngine::q_w0_double_determinant(AmbientRank n) const {
  Polynomial out(1LL);
  for (int i = 1; i < n.n; ++i) out *= delta_determinant(i, Polynomial::y(n.n - i));
  return out;
}

// ---------------------------------------------------------------------------
// Quantum Schubert polynomials

// The top class keeping only the y-degrees that survive the divided
// differences leading to w: at least ell(w0) - ell(w), and exactly that much
// when y is set to zero afterwards.
Polynomial QuantumEngine::staircase_product(const Permutation& w, AmbientRank n, bool y_free) {
  const int steps = n.n * (n.n - 1) / 2 - w.length();
  std::map<int, Polynomial> by_degree{{0, Polynomial(1LL)}};
  int remaining = n.n * (n.n - 1) / 2;
  for (int i = 1; i < n.n; ++i) {
    remaining -= i;
    const Polynomial t = Polynomial::y(n.n - i);
    std::map<int, Polynomial> next;
    for (const auto& [d, part] : by_degree) {
      for (int k = 0; k <= i; ++k) {
        const int nd = d + i - k;
        if (nd + remaining < steps || (y_free && nd > steps)) continue;
        next[nd] += part * q_elementary(k, i) * t.pow(i - k);
      }
    }
    by_degree = std::move(next);
  }
  Polynomial out;
  for (const auto& [d, part] : by_degree) out += part;
  return out;
}

Polynomial QuantumEngine::q_double_schubert(const Permutation& w, AmbientRank n) {
  const Permutation v = fit_rank(w, n);
  const std::pair key{v, n.n};
  if (auto hit = lookup(schubert_mutex_, double_cache_, key)) return *hit;
  Polynomial value = divided_diff_word(staircase_product(v, n, false), left_ascent_word(v), Family::Y);
  return store(schubert_mutex_, double_cache_, key, std::move(value));
}

std::map<Permutation, Polynomial> QuantumEngine::q_double_schubert_all(AmbientRank n) {
  std::map<Permutation, Polynomial> out;
  std::deque<Permutation> queue{Permutation::longest(n.n)};
  out.emplace(queue.front(), q_w0_double(n));
  while (!queue.empty()) {
    const Permutation u = queue.front();
    queue.pop_front();
    const Permutation inv = u.inverse();
    for (int i = 1; i < n.n; ++i) {
      if (inv(i) < inv(i + 1)) continue;
      Permutation child = u.simple_times(i);
      if (out.count(child)) continue;
      out.emplace(child, divided_diff(out.at(u), i, Family::Y));
      queue.push_back(child);
    }
  }
  for (const auto& [w, p] : out) store(schubert_mutex_, double_cache_, std::pair{w, n.n}, p);
  return out;
}

Polynomial QuantumEngine::q_schubert(const Permutation& w, AmbientRank n) {
  const Permutation v = fit_rank(w, n);
  const std::pair key{v, n.n};
  if (auto hit = lookup(schubert_mutex_, single_cache_, key)) return *hit;
  Polynomial value = divided_diff_word(staircase_product(v, n, true), left_ascent_word(v), Family::Y);
  return store(schubert_mutex_, single_cache_, key, std::move(value));
}

std::map<Permutation, Polynomial> QuantumEngine::q_schubert_all(AmbientRank n) {
  std::map<Permutation, Polynomial> out;
  for (const auto& [w, p] : q_double_schubert_all(n)) {
    Polynomial single = zero_family(p, Family::Y);
    store(schubert_mutex_, single_cache_, std::pair{w, n.n}, single);
    out.emplace(w, std::move(single));
  }
  return out;
}

Polynomial QuantumEngine::quantize(const Polynomial& f, std::optional<int> n) {
  if (f.involves(Family::Y) || f.involves(Family::Q)) {
    throw Error(ErrorCode::ForeignVariables, "quantize takes polynomials in x only");
  }
  const int rank = n.value_or(std::max(1, f.max_index(Family::X)));
  if (rank < f.max_index(Family::X)) {
    throw Error(ErrorCode::ForeignVariables, "polynomial involves x beyond the requested rank");
  }
  Polynomial out;
  for (const auto& [w, c] : schubert_expand(f).coefficients) {
    const int ambient = std::max(rank, w.rank());
    out += Polynomial(c) * q_schubert(w.padded(ambient), AmbientRank(ambient));
  }
  return restrict(out, rank);
}

// ---------------------------------------------------------------------------
// Quantum symmetric functions

Polynomial QuantumEngine::q_complete(int k, int r) {
  if (k < 0) return Polynomial();
  if (k == 0) return Polynomial(1LL);
  const std::pair key{k, r};
  if (auto hit = lookup(h_mutex_, h_cache_, key)) return *hit;
  Polynomial value = determinant(k, [&](int i, int j) { return q_elementary(1 - i + j, r - 1 + j); });
  return store(h_mutex_, h_cache_, key, std::move(value));
}

Polynomial QuantumEngine::q_xy_elementary(int m, int k, int l) {
  Polynomial out;
  for (int j = 0; j <= m; ++j) {
    Polynomial e = q_elementary(m - j, k);
    if (e.is_zero()) continue;
    out += e * complete(j, l, Family::Y);
  }
  return out;
}

Polynomial QuantumEngine::q_xy_complete(int m, int k, int l) {
  Polynomial out;
  for (int j = 0; j <= m; ++j) {
    Polynomial e = elementary(j, l, Family::Y);
    if (e.is_zero()) continue;
    out += q_complete(m - j, k) * e;
  }
  return out;
}

Polynomial QuantumEngine::q_schur(const Partition& lambda, int r, AmbientRank n) {
  if (r < 1 || r >= n.n || !lambda.fits_in_box(r, n.n - r)) {
    throw Error(ErrorCode::ShapeOutOfBox, "shape must fit the r x (n - r) box with 1 <= r < n");
  }
  const Partition conj = lambda.conjugate();
  return determinant(n.n - r, [&](int i, int j) { return q_elementary(conj.at(i) - i + j, r - 1 + j); });
}

Polynomial QuantumEngine::q_schur_jacobi_trudi(const Partition& lambda, int r) {
  if (lambda.length() > r) throw Error(ErrorCode::ShapeOutOfBox, "shape longer than the alphabet");
  return determinant(r, [&](int i, int j) { return q_complete(lambda.at(i) - i + j, r + 1 - j); });
}

Polynomial QuantumEngine::q_monomial(const Composition& alpha, AmbientRank n) {
  for (int i = 1; i <= alpha.size(); ++i) {
    if (alpha.at(i) < 0 || alpha.at(i) > n.n - i) {
      throw Error(ErrorCode::CompositionOutOfBox, "exponent vector not below the staircase");
    }
  }
  return determinant(n.n, [&](int i, int j) { return q_complete(alpha.at(i) - i + j, i); });
}

Polynomial QuantumEngine::q_bjs(const Permutation& w, AmbientRank n) {
  fit_rank(w, n);
  std::map<std::vector<int>, Integer> multiplicity;
  for (const Word& a : reduced_words(w)) {
    for (const Word& b : compatible_sequences(a)) {
      std::vector<int> exps(n.n, 0);
      for (int v : b) ++exps[v - 1];
      ++multiplicity[exps];
    }
  }
  Polynomial out;
  for (const auto& [exps, count] : multiplicity) out += Polynomial(count) * q_monomial(Composition{exps}, n);
  return out;
}

Polynomial QuantumEngine::q_factorial_schur(const Partition& lambda, int r, AmbientRank n) {
  return q_double_schubert(grassmannian_permutation(lambda, r, n.n), n);
}

// ---------------------------------------------------------------------------
// Flagged determinants

Polynomial QuantumEngine::q_flagged_row(const SkewShape& shape, const Flag& flag) {
  if (flag.length() < shape.rows()) throw Error(ErrorCode::BadFlag, "row flag shorter than the shape");
  return determinant(flag.length(), [&](int i, int j) {
    return q_complete(shape.outer.at(i) - shape.inner.at(j) - i + j, flag.at(i));
  });
}

Polynomial QuantumEngine::q_flagged_column(const SkewShape& shape, const Flag& flag) {
  if (flag.length() < shape.outer.at(1)) throw Error(ErrorCode::BadFlag, "column flag shorter than lambda_1");
  const Partition outer = shape.outer.conjugate();
  const Partition inner = shape.inner.conjugate();
  return determinant(flag.length(), [&](int i, int j) {
    return q_elementary(outer.at(i) - inner.at(j) - i + j, flag.at(j));
  });
}

Polynomial QuantumEngine::q_multi_schur(const SkewShape& shape, const std::vector<int>& x_flag,
                                        const std::vector<int>& y_flag) {
  const int m = static_cast<int>(x_flag.size());
  if (static_cast<int>(y_flag.size()) != m || m < shape.rows()) {
    throw Error(ErrorCode::BadFlag, "flags must have equal length, at least the number of rows");
  }
  for (int i = 0; i < m; ++i) {
    if (x_flag[i] < 0 || y_flag[i] < 0) throw Error(ErrorCode::BadFlag, "negative flag entry");
  }
  return determinant(m, [&](int i, int j) {
    return q_xy_complete(shape.outer.at(i) - shape.inner.at(j) - i + j, x_flag[i - 1], y_flag[j - 1]);
  });
}

Polynomial QuantumEngine::q_multi_schur_rows(const SkewShape& shape, const std::vector<FlaggedDifference>& rows) {
  const int m = static_cast<int>(rows.size());
  if (m < shape.rows()) throw Error(ErrorCode::BadFlag, "fewer alphabets than rows");
  for (const auto& z : rows) {
    if (z.x_flag < 0 || z.y_flag < 0) throw Error(ErrorCode::BadFlag, "negative flag entry");
  }
  return determinant(m, [&](int i, int j) {
    const auto& z = rows[i - 1];
    return q_xy_complete(shape.outer.at(i) - shape.inner.at(j) - i + j, z.x_flag, z.y_flag);
  });
}

Polynomial QuantumEngine::q_theta_flagged(const Permutation& w, const std::optional<Flag>& flag) {
  return q_flagged_row(SkewShape(shape(w), Partition()), flag.value_or(flag_theta(w)));
}

Polynomial QuantumEngine::q_rv(const Permutation& w) {
  if (!is_in_class(w, PermClass::RestrictedVexillary)) {
    throw Error(ErrorCode::NotRestrictedVexillary, w.to_string() + " is not restricted vexillary");
  }
  return q_theta_flagged(w);
}

std::vector<FlaggedDifference> QuantumEngine::rv_double_alphabets(const Permutation& w,
                                                                  YFlagReading reading) const {
  const Partition lambda = shape(w);
  const Partition lambda_inv = shape(w.inverse());
  const Flag theta = flag_theta(w);
  const Flag theta_inv = flag_theta(w.inverse());
  std::vector<FlaggedDifference> rows;
  for (int i = 1; i <= lambda.length(); ++i) {
    int index = 0;
    switch (reading) {
      case YFlagReading::ConjugateIndex: index = lambda_inv.at(i); break;
      case YFlagReading::RowIndex: index = lambda.at(i); break;
      case YFlagReading::ClampedConjugate: index = std::min(lambda_inv.at(i), theta_inv.length()); break;
    }
    int y = 0;
    if (index >= 1 && index <= theta_inv.length()) {
      y = theta_inv.at(index);
    } else if (reading != YFlagReading::ClampedConjugate) {
      throw Error(ErrorCode::BadFlag, "Y index " + std::to_string(index) + " outside the inverse flag of " +
                                          w.to_string());
    }
    rows.push_back({theta.at(i), y});
  }
  return rows;
}

Polynomial QuantumEngine::q_rv_double(const Permutation& w, YFlagReading reading) {
  if (!is_in_class(w, PermClass::RestrictedVexillary)) {
    throw Error(ErrorCode::NotRestrictedVexillary, w.to_string() + " is not restricted vexillary");
  }
  return q_multi_schur_rows(SkewShape(shape(w), Partition()), rv_double_alphabets(w, reading));
}

Polynomial QuantumEngine::q_grassmannian_double(const Permutation& w, AmbientRank n) {
  const Permutation v = fit_rank(w, n);
  const auto descents = v.descents();
  if (descents.size() > 1) throw Error(ErrorCode::NotGrassmannian, w.to_string() + " has several descents");
  if (descents.empty()) return Polynomial(1LL);
  const int r = descents.front();
  const Partition conj = shape(v).conjugate();
  const Flag theta_inv = flag_theta(v.inverse());
  return determinant(n.n - r, [&](int i, int j) {
    const int y = i <= theta_inv.length() ? theta_inv.at(i) : 0;
    return q_xy_elementary(conj.at(i) - i + j, r - 1 + j, y);
  });
}

Polynomial QuantumEngine::q_skew_flagged(const Permutation& w) {
  const SkewData data = skew_data(w);
  return q_flagged_row(data.shape, data.flag);
}

std::vector<int> QuantumEngine::skew_double_y_flag(const Permutation& w, ColumnFlagReading reading) const {
  const SkewData data = skew_data(w);
  const SkewData inv = skew_data(w.inverse());
  std::vector<int> y;
  for (int j = 1; j <= data.shape.rows(); ++j) {
    const int index = reading == ColumnFlagReading::DirectIndex ? j : inv.shape.row_length(j);
    y.push_back(index >= 1 && index <= inv.flag.length() ? inv.flag.at(index) : 0);
  }
  return y;
}

Polynomial QuantumEngine::q_skew_double(const Permutation& w, ColumnFlagReading reading) {
  const SkewData data = skew_data(w);
  return q_multi_schur(data.shape, data.flag.entries(), skew_double_y_flag(w, reading));
}

Polynomial QuantumEngine::stable_approx(const Permutation& w, int m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "padding must be nonnegative");
  return q_schubert(pad_embed(m, w), AmbientRank(m + w.rank()));
}

}  // namespace qsk
