#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "qsk/determinant.hpp"
#include "qsk/quantum.hpp"
#include "qsk/schubert.hpp"

using namespace qsk;
using Perm = Permutation;
using Poly = Polynomial;

namespace {

Perm P(const char* s) { return Perm::parse(s); }
Poly parse(const char* s) { return parse_polynomial(s); }
QuantumEngine& E() { return default_engine(); }

const char* kFactorial22 =
    "q1^2 + q1*q2 - q2*x1^2 + 2*q1*x1*x2 + x1^2*x2^2 + q1*x1*a1 - q2*x1*a1 + q1*x2*a1 + x1^2*x2*a1"
    " + x1*x2^2*a1 + q1*a1^2 + x1*x2*a1^2 + q1*x1*a2 - q2*x1*a2 + q1*x2*a2 + x1^2*x2*a2 + x1*x2^2*a2"
    " - q2*a1*a2 + x1^2*a1*a2 + 2*x1*x2*a1*a2 + x2^2*a1*a2 + x1*a1^2*a2 + x2*a1^2*a2 + q1*a2^2"
    " + x1*x2*a2^2 + x1*a1*a2^2 + x2*a1*a2^2 + a1^2*a2^2";

// Oracle for the quantum elementary functions: the tridiagonal determinant at t = 0.
Poly e_tilde_oracle(int k, int r) {
  if (k < 0 || k > r) return Poly(0LL);
  Poly out;
  // e~_k(X_r) is the coefficient of t^{r-k} in Delta_r(t).
  const Poly t = Poly::y(16);
  const Poly d = E().delta_determinant(r, t);
  for (const Term& term : d.terms()) {
    if (term.monomial.exponent(Variable::y(16)) == r - k) {
      out += Poly(term.monomial.with_exponent(Variable::y(16), 0), term.coeff);
    }
  }
  return out;
}

Poly drop_q_from(const Poly& p, int from) {
  return p.filter([from](const Monomial& m) { return m.max_index(Family::Q) < from; });
}

}  // namespace

TEST_CASE("quantum elementary functions") {
  CHECK(E().q_elementary(2, 2) == parse("x1*x2 + q1"));
  CHECK(E().q_elementary(1, 4) == parse("x1+x2+x3+x4"));
  CHECK(E().q_elementary(3, 3) == parse("x1*x2*x3 + q1*x3 + q2*x1"));
  CHECK(E().q_elementary(0, 0) == Poly(1LL));
  CHECK(E().q_elementary(4, 3).is_zero());
  for (int r = 0; r <= 6; ++r) {
    for (int k = 0; k <= r; ++k) CHECK(E().q_elementary(k, r) == e_tilde_oracle(k, r));
  }
  CHECK(E().delta(1, Poly::y(1)) == parse("x1+y1"));
  CHECK(E().delta(2, Poly::y(1)) == parse("x1*x2+q1+(x1+x2)*y1+y1^2"));
  CHECK(E().delta(3, Poly(0LL)) == E().q_elementary(3, 3));
}

TEST_CASE("top class") {
  CHECK(E().q_w0_double(AmbientRank(2)) == parse("x1+y1"));
  CHECK(zero_family(E().q_w0_double(AmbientRank(3)), Family::Y) == parse("x1^2*x2 + q1*x1"));
  for (int n = 1; n <= 5; ++n) {
    const AmbientRank rank(n);
    CHECK(E().q_w0_double(rank) == E().q_w0_double_determinant(rank));
    CHECK(zero_family(E().q_w0_double(rank), Family::Q) == double_schubert(Perm::longest(n)));
    CHECK(E().q_double_schubert(Perm::longest(n), rank) == E().q_w0_double(rank));
  }
  CHECK_THROWS_AS(AmbientRank(0), Error);
  CHECK_THROWS_AS(AmbientRank(16), Error);
}

TEST_CASE("small examples") {
  const Poly s21 = parse("x1^2*x2+x1*x2^2+x1^2*x3+x1*x3^2+x2^2*x3+x2*x3^2+2*x1*x2*x3");
  const Poly expected = s21 + parse("q1*(x1+x2) + q2*(x2+x3) - q3*(x1+x2)");
  CHECK(E().q_schubert(P("13524"), AmbientRank(5)) == expected);
  CHECK(E().q_schur(Partition({2, 1}), 3, AmbientRank(5)) == expected);
  const Poly det = determinant(2, [](int i, int j) {
    const int k[2][2] = {{2, 3}, {0, 1}};
    const int r[2][2] = {{3, 4}, {4, 4}};
    return E().q_elementary(k[i - 1][j - 1], r[i - 1][j - 1]);
  });
  CHECK(det == expected);
  // The h~ determinant over X_3 alone differs by q3 (x1 + x2 + x3 + x4).
  const Poly h_det = E().q_complete(2, 3) * E().q_complete(1, 3) - E().q_complete(3, 3);
  CHECK(h_det == s21 + parse("q1*(x1+x2) + q2*(x2+x3) + q3*(x3+x4)"));
  CHECK(h_det - expected == parse("q3*(x1+x2+x3+x4)"));

  CHECK(E().q_schubert(P("1342"), AmbientRank(4)) == parse("x1*x2+x1*x3+x2*x3+q1+q2"));
  CHECK(E().q_schubert(P("321"), AmbientRank(3)) == parse("x1^2*x2 + q1*x1"));
  CHECK(E().q_schubert(P("1"), AmbientRank(1)) == Poly(1LL));
  CHECK(E().q_double_schubert(Perm::identity(4), AmbientRank(4)) == Poly(1LL));
}

TEST_CASE("quantum factorial Schur function of the square") {
  const Poly expected = parse(kFactorial22);
  CHECK(expected.size() == 28);
  const Perm w = P("3412");
  const AmbientRank rank(4);
  CHECK(E().q_factorial_schur(Partition({2, 2}), 2, rank) == expected);
  CHECK(E().q_double_schubert(w, rank) == expected);
  CHECK(E().q_rv_double(w) == expected);
  CHECK(E().q_grassmannian_double(w, rank) == expected);
  CHECK(zero_family(expected, Family::Y) == E().q_schur(Partition({2, 2}), 2, rank));
  CHECK(zero_family(expected, Family::Q) == double_schubert(w));
}

TEST_CASE("quantization") {
  CHECK(E().quantize(parse("x1+x2")) == parse("x1+x2"));
  CHECK(E().quantize(parse("x1*x2")) == parse("x1*x2 + q1"));
  CHECK(E().quantize(parse("x1^2"), 3) == parse("x1^2 - q1"));
  CHECK(E().quantize(Poly(5LL)) == Poly(5LL));
  CHECK_THROWS_AS(E().quantize(parse("x1*y1")), Error);
  for (int n = 1; n <= 4; ++n) {
    for (const Perm& w : all_permutations(n)) {
      CHECK(E().quantize(schubert(w), n) == E().q_schubert(w, AmbientRank(n)));
    }
  }
}

TEST_CASE("quantum complete functions") {
  CHECK(E().q_complete(1, 3) == parse("x1+x2+x3"));
  CHECK(E().q_complete(2, 2) == parse("x1^2+x1*x2+x2^2-q1-q2"));
  CHECK(E().q_complete(3, 1) == parse("x1^3 - 2*q1*x1 - q1*x2"));
  CHECK(E().q_complete(0, 0) == Poly(1LL));
  CHECK(E().q_xy_elementary(1, 2, 1) == parse("x1+x2+y1"));
  CHECK(E().q_xy_elementary(0, 3, 2) == Poly(1LL));
  for (int k = 0; k <= 3; ++k) {
    CHECK(E().q_xy_complete(k, 2, 0) == E().q_complete(k, 2));
    CHECK(E().q_schur(Partition({k}), 2, AmbientRank(2 + std::max(k, 1))) == E().q_complete(k, 2));
  }
  CHECK(E().q_schur(Partition{}, 2, AmbientRank(4)) == Poly(1LL));
  CHECK_THROWS_AS(E().q_schur(Partition({3}), 2, AmbientRank(4)), Error);
}

TEST_CASE("quantum monomials and the BJS sum") {
  CHECK(E().q_monomial(Composition{{1, 1}}, AmbientRank(3)) == parse("x1*x2 + q1"));
  CHECK(E().q_monomial(Composition{{2}}, AmbientRank(3)) == parse("x1^2 - q1"));
  CHECK(E().q_monomial(Composition{{1}}, AmbientRank(2)) == parse("x1"));
  CHECK_THROWS_AS(E().q_monomial(Composition{{3}}, AmbientRank(3)), Error);
  CHECK(E().q_bjs(P("213"), AmbientRank(3)) == parse("x1"));
  CHECK(E().q_bjs(P("132"), AmbientRank(3)) == parse("x1+x2"));
  CHECK(E().q_bjs(P("321"), AmbientRank(3)) == parse("x1^2*x2 + q1*x1"));
  for (const Perm& w : all_permutations(4)) {
    CHECK(E().q_bjs(w, AmbientRank(4)) == E().q_schubert(w, AmbientRank(4)));
  }
}

TEST_CASE("flagged determinants") {
  const SkewShape col(Partition({1, 1}), Partition{});
  CHECK(E().q_flagged_row(col, Flag({2, 3})) == parse("x1*x2+x1*x3+x2*x3+q1+q2"));
  CHECK(E().q_flagged_row(col, Flag({3, 3})) == parse("x1*x2+x1*x3+x2*x3+q1+q2+q3"));
  CHECK(E().q_flagged_row(SkewShape{}, Flag{}) == Poly(1LL));
  CHECK_THROWS_AS(E().q_flagged_row(col, Flag({2})), Error);
  CHECK(E().q_theta_flagged(P("1342")) == E().q_schubert(P("1342"), AmbientRank(4)));
}

TEST_CASE("vexillary identities outside the restricted class") {
  auto qs = [](const char* w) { return E().q_schubert(P(w), AmbientRank(P(w).rank())); };
  CHECK(qs("2431") == E().q_theta_flagged(P("2431")) - parse("q2*q3"));
  CHECK(E().q_theta_flagged(P("42513")) == qs("42513") + Poly::q(3) * qs("41235") * qs("12354") - Poly::q(3) * qs("51234"));
  CHECK(q_partial(qs("42513"), 3) == -qs("42135"));
  // 2413: the sign of the q2 correction is negative.
  const Poly sum = parse("x1+x2+x3");
  CHECK(qs("2413") == E().q_theta_flagged(P("2413")) - Poly::q(2) * sum);
  CHECK(qs("2413") != E().q_theta_flagged(P("2413")) + Poly::q(2) * sum);
  CHECK(qs("2413") == parse("x1^2*x2 + x1*x2^2 + q1*x1 - q2*x1 + q1*x2"));
  CHECK(E().q_theta_flagged(P("2413")) == parse("x1^2*x2 + x1*x2^2 + q1*x1 + q1*x2 + q2*x2 + q2*x3"));
}

TEST_CASE("vexillary q truncation holds through rank 4 and has four exceptions at rank 5") {
  auto misses = [](int n) {
    std::set<std::string> out;
    for (const Perm& w : enumerate_class(n, PermClass::Vexillary)) {
      const Composition c = code(w);
      int last = 1;
      for (int i = 1; i <= c.size(); ++i) {
        if (c.at(i) != 0) last = i;
      }
      const Poly lhs = drop_q_from(E().q_schubert(w, AmbientRank(n)), last);
      const Poly rhs = drop_q_from(E().q_theta_flagged(w), last);
      if (lhs != rhs) out.insert(w.to_string());
    }
    return out;
  };
  for (int n = 1; n <= 4; ++n) CHECK(misses(n).empty());
  CHECK(misses(5) == std::set<std::string>{"35142", "35214", "35241", "35421"});
  // 42513 is covered.
  CHECK(substitute(E().q_schubert(P("42513"), AmbientRank(5)), Variable::q(3), 0) ==
        substitute(E().q_theta_flagged(P("42513")), Variable::q(3), 0));
}

TEST_CASE("restricted vexillary determinants") {
  for (int n = 1; n <= 5; ++n) {
    const AmbientRank rank(n);
    for (const Perm& w : enumerate_class(n, PermClass::RestrictedVexillary)) {
      CHECK(E().q_rv(w) == E().q_schubert(w, rank));
      CHECK(E().q_rv_double(w) == E().q_double_schubert(w, rank));
    }
  }
  CHECK_THROWS_AS(E().q_rv(P("2413")), Error);
  // The conjugate index leaves the flag range already for 231.
  CHECK_THROWS_AS(E().q_rv_double(P("231"), YFlagReading::ConjugateIndex), Error);
  for (int n = 2; n <= 4; ++n) CHECK(E().q_rv_double(Perm::longest(n)) == E().q_w0_double(AmbientRank(n)));
}

TEST_CASE("Grassmannian double determinants") {
  for (int n = 1; n <= 5; ++n) {
    for (const Perm& w : enumerate_class(n, PermClass::Grassmannian)) {
      CHECK(E().q_grassmannian_double(w, AmbientRank(n)) == E().q_double_schubert(w, AmbientRank(n)));
    }
  }
  CHECK_THROWS_AS(E().q_grassmannian_double(P("2143"), AmbientRank(4)), Error);
}

TEST_CASE("321-avoiding determinants") {
  const Perm w = P("2413");
  CHECK(E().q_multi_schur(SkewShape(Partition({2, 2}), Partition({1})), {1, 2}, {1, 3}) ==
        E().q_double_schubert(w, AmbientRank(4)));
  CHECK(E().skew_double_y_flag(w, ColumnFlagReading::DirectIndex) == std::vector<int>{1, 3});
  CHECK(E().skew_double_y_flag(w, ColumnFlagReading::RowLengthIndex) == std::vector<int>{3, 1});
  for (int n = 1; n <= 5; ++n) {
    for (const Perm& v : enumerate_class(n, PermClass::Avoiding321)) {
      CHECK(E().q_skew_flagged(v) == E().q_schubert(v, AmbientRank(n)));
    }
  }
  CHECK_THROWS_AS(E().q_skew_flagged(P("321")), Error);
}

TEST_CASE("q derivative and degeneration properties") {
  for (const Perm& w : all_permutations(4)) {
    const Poly p = E().q_schubert(w, AmbientRank(4));
    CHECK(zero_family(p, Family::Q) == schubert(w));
    CHECK(p.is_homogeneous());
    CHECK(p.max_index(Family::Q) <= 3);
    CHECK(p.max_index(Family::X) <= 4);
  }
  CHECK(q_partial(parse("x1*x2+q1"), 1) == Poly(1LL));
}

TEST_CASE("stable approximants") {
  const Perm w = P("321");
  CHECK(E().stable_approx(w, 0) == E().q_schubert(w, AmbientRank(3)));
  for (int m = 0; m <= 4; ++m) {
    const Poly det = E().q_complete(2, m + 1) * E().q_complete(1, m + 2) - E().q_complete(3, m + 1);
    CHECK(E().stable_approx(w, m) == det);
  }
  CHECK_THROWS_AS(E().stable_approx(w, -1), Error);
}

TEST_CASE("rank handling") {
  CHECK(E().q_schubert(P("21"), AmbientRank(3)) == E().q_schubert(P("213"), AmbientRank(3)));
  CHECK_THROWS_AS(E().q_schubert(P("4321"), AmbientRank(3)), Error);
}

TEST_CASE("corrupted engine differs") {
  QuantumEngine bad(QuantumEngine::Options{.corrupt_e2 = true});
  CHECK(bad.q_elementary(2, 2) == parse("x1*x2 - q1"));
  CHECK(bad.q_w0_double(AmbientRank(3)) != E().q_w0_double(AmbientRank(3)));
  CHECK(bad.q_w0_double_determinant(AmbientRank(3)) == E().q_w0_double_determinant(AmbientRank(3)));
}
