#include "qsk/schubert.hpp"

#include <deque>

#include "qsk/determinant.hpp"

namespace qsk {

Polynomial divided_diff(const Polynomial& f, int i, Family family) {
  if (family == Family::Q) throw Error(ErrorCode::InvalidArgument, "divided differences act on x or y");
  if (i < 1 || i >= kMaxIndex) throw Error(ErrorCode::CapacityExceeded, "divided difference index out of range");
  const Variable va{family, i};
  const Variable vb{family, i + 1};
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    const int p = t.monomial.exponent(va);
    const int q = t.monomial.exponent(vb);
    if (p == q) continue;
    // d(a^p b^q) = a^m b^m * sum_{k} a^{d-1-k} b^k with m = min, d = |p - q|,
    // negated when the larger power sits on b.
    const int m = std::min(p, q);
    const int d = std::abs(p - q);
    Integer c = p > q ? t.coeff : Integer(-t.coeff);
    for (int k = 0; k < d; ++k) {
      Monomial mono = t.monomial.with_exponent(va, m + d - 1 - k).with_exponent(vb, m + k);
      out.push_back({mono, c});
    }
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial divided_diff_word(const Polynomial& f, const Word& word, Family family) {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = divided_diff(g, *it, family);
  return g;
}

Polynomial divided_diff_w(const Polynomial& f, const Permutation& w, Family family) {
  return divided_diff_word(f, reduced_word(w), family);
}

// ---------------------------------------------------------------------------

namespace {

Polynomial monomial_of(const Composition& c) {
  Monomial m;
  for (int i = 1; i <= c.size(); ++i) {
    if (c.at(i) > 0) m = m.with_exponent(Variable::x(i), c.at(i));
  }
  return Polynomial(m);
}

Polynomial staircase(int n) {
  Composition c;
  for (int i = 1; i <= n; ++i) c.parts.push_back(n - i);
  return monomial_of(c);
}

Polynomial double_top(int n) {
  Polynomial p(1LL);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; i + j <= n; ++j) p *= Polynomial::x(i) + Polynomial::y(j);
  }
  return p;
}

}  // namespace

Polynomial schubert(const Permutation& w) {
  Permutation v = w;
  Word word;
  while (true) {
    Composition c = code(v);
    int step = 0;
    for (int i = 1; i < c.size(); ++i) {
      if (c.at(i) < c.at(i + 1)) {
        step = i;
        break;
      }
    }
    if (step == 0) break;
    word.push_back(step);
    v = v.times_simple(step);
  }
  return divided_diff_word(monomial_of(code(v)), word);
}

Polynomial schubert_via_staircase(const Permutation& w) {
  const int n = w.rank();
  return divided_diff_w(staircase(n), w.inverse().compose(Permutation::longest(n)));
}

Polynomial double_schubert(const Permutation& w) {
  return divided_diff_word(double_top(w.rank()), left_ascent_word(w), Family::Y);
}

std::map<Permutation, Polynomial> schubert_all(int n) {
  std::map<Permutation, Polynomial> out;
  std::deque<Permutation> queue{Permutation::longest(n)};
  out.emplace(queue.front(), staircase(n));
  while (!queue.empty()) {
    Permutation u = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      if (u(i) < u(i + 1)) continue;
      Permutation child = u.times_simple(i);
      if (out.count(child)) continue;
      out.emplace(child, divided_diff(out.at(u), i));
      queue.push_back(child);
    }
  }
  return out;
}

std::map<Permutation, Polynomial> double_schubert_all(int n) {
  std::map<Permutation, Polynomial> out;
  std::deque<Permutation> queue{Permutation::longest(n)};
  out.emplace(queue.front(), double_top(n));
  while (!queue.empty()) {
    Permutation u = queue.front();
    queue.pop_front();
    Permutation inv = u.inverse();
    for (int i = 1; i < n; ++i) {
      if (inv(i) < inv(i + 1)) continue;
      Permutation child = u.simple_times(i);
      if (out.count(child)) continue;
      out.emplace(child, divided_diff(out.at(u), i, Family::Y));
      queue.push_back(child);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Polynomial elementary(int k, int r, Family family) {
  if (k < 0 || k > r) return Polynomial();
  // row[j] = e_j(v_1..v_s), grown one variable at a time
  std::vector<Polynomial> row(k + 1);
  row[0] = Polynomial(1LL);
  for (int s = 1; s <= r; ++s) {
    Polynomial v(Variable{family, s});
    for (int j = std::min(k, s); j >= 1; --j) row[j] += v * row[j - 1];
  }
  return row[k];
}

Polynomial complete(int k, int r, Family family) {
  if (k < 0) return Polynomial();
  if (k == 0) return Polynomial(1LL);
  if (r <= 0) return Polynomial();
  std::vector<Polynomial> row(k + 1);
  row[0] = Polynomial(1LL);
  for (int s = 1; s <= r; ++s) {
    Polynomial v(Variable{family, s});
    for (int j = 1; j <= k; ++j) row[j] += v * row[j - 1];
  }
  return row[k];
}

Polynomial schur(const Partition& lambda, int r) {
  const int len = lambda.length();
  return determinant(len, [&](int i, int j) { return complete(lambda.at(i) - i + j, r); });
}

Polynomial flagged_schur(const SkewShape& shape, const Flag& flag, Family family) {
  const int len = shape.rows();
  if (flag.length() != len) throw Error(ErrorCode::BadFlag, "flag length differs from the number of rows");
  return determinant(len, [&](int i, int j) {
    return complete(shape.outer.at(i) - shape.inner.at(j) - i + j, flag.at(i), family);
  });
}

// ---------------------------------------------------------------------------

Polynomial SchubertExpansion::reconstruct() const {
  Polynomial out;
  for (const auto& [w, c] : coefficients) out += Polynomial(c) * schubert(w);
  return out;
}

SchubertExpansion schubert_expand(const Polynomial& f) {
  if (f.involves(Family::Y) || f.involves(Family::Q)) {
    throw Error(ErrorCode::ForeignVariables, "schubert_expand takes polynomials in x only");
  }
  SchubertExpansion out;
  // Left weak order from the identity: g_{s_j u} = d_j g_u whenever s_j u is longer.
  std::map<Permutation, Polynomial> frontier{{Permutation::identity(1), f}};
  while (!frontier.empty()) {
    std::map<Permutation, Polynomial> next;
    for (const auto& [u, g] : frontier) {
      Integer c = g.constant_term();
      if (c != 0) out.coefficients.emplace(u, c);
      if (g.is_constant()) continue;
      const int top = g.max_index(Family::X);
      const Permutation wide = u.padded(std::max(u.rank(), top + 1));
      const Permutation inv = wide.inverse();
      for (int j = 1; j <= top; ++j) {
        if (inv(j) > inv(j + 1)) continue;  // s_j u would be shorter
        Permutation child = wide.simple_times(j).trimmed();
        if (next.count(child)) continue;
        Polynomial h = divided_diff(g, j);
        if (!h.is_zero()) next.emplace(child, std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace qsk
