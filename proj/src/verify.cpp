#include "qsk/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "qsk/determinant.hpp"
#include "qsk/schubert.hpp"

namespace qsk::verify {

namespace {

using Perm = Permutation;

std::string id_of(const Perm& w) { return w.to_string(); }

std::string id_of(const Partition& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

// Partitions inside the rows x cols box, in reverse lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts(rows, 0);
  std::function<void(int, int)> fill = [&](int i, int cap) {
    if (i == rows) {
      out.emplace_back(parts);
      return;
    }
    for (int v = cap; v >= 0; --v) {
      parts[i] = v;
      fill(i + 1, v);
    }
    parts[i] = 0;
  };
  fill(0, cols);
  return out;
}

// y_i -> y_{shift+i}: a second alphabet stored past the first.
Polynomial shift_y(const Polynomial& p, int shift) {
  return relabel(p, [shift](Variable v) {
    return v.family == Family::Y ? Relabel{Variable::y(v.index + shift)} : Relabel{v};
  });
}

// A classical double polynomial f(x, y) rewritten as f(y, -z), z_i = y_{shift+i}.
Polynomial as_y_minus_z(const Polynomial& p, int shift) {
  return relabel(p, [shift](Variable v) {
    if (v.family == Family::X) return Relabel{Variable::y(v.index)};
    if (v.family == Family::Y) return Relabel{Variable::y(v.index + shift), -1};
    return Relabel{v};
  });
}

Polynomial x_to_y(const Polynomial& p) {
  return relabel(p, [](Variable v) { return v.family == Family::X ? Relabel{Variable::y(v.index)} : Relabel{v}; });
}

Polynomial zero_q(const Polynomial& p) { return zero_family(p, Family::Q); }

// Drops every monomial carrying some q_j with j >= from.
Polynomial drop_q_from(const Polynomial& p, int from) {
  return p.filter([from](const Monomial& m) { return m.max_index(Family::Q) < from; });
}

Polynomial x_power(const Composition& alpha) {
  Monomial m;
  for (int i = 1; i <= alpha.size(); ++i) {
    if (alpha.at(i) > 0) m = m.with_exponent(Variable::x(i), alpha.at(i));
  }
  return Polynomial(m);
}

void compositions_below_staircase(int n, std::vector<Composition>& out) {
  Composition c;
  c.parts.assign(n, 0);
  std::function<void(int)> fill = [&](int i) {
    if (i > n) {
      out.push_back(c);
      return;
    }
    for (int v = 0; v <= n - i; ++v) {
      c.parts[i - 1] = v;
      fill(i + 1);
    }
  };
  fill(1);
}

// ---------------------------------------------------------------------------

void cauchy_cases(int n, bool slow, std::vector<Case>& cases, std::vector<std::string>& skipped) {
  for (int k = 2; k <= n; ++k) {
    if (k >= 5 && !slow) {
      skipped.push_back("rank " + std::to_string(k) + " (needs --slow)");
      continue;
    }
    const std::string rank = "n=" + std::to_string(k);
    cases.push_back({"single/" + rank, CaseMode::Assert, [k](QuantumEngine& e) {
                       const AmbientRank r(k);
                       const Perm w0 = Perm::longest(k);
                       const auto classical = schubert_all(k);
                       Polynomial lhs;
                       for (const auto& [w, p] : e.q_schubert_all(r)) lhs += p * x_to_y(classical.at(w.compose(w0)));
                       return Comparison{e.q_w0_double_determinant(r), lhs};
                     }});
    cases.push_back({"double/" + rank, CaseMode::Assert, [k](QuantumEngine& e) {
                       const AmbientRank r(k);
                       const Perm w0 = Perm::longest(k);
                       const auto classical = double_schubert_all(k);
                       Polynomial lhs;
                       for (const auto& [w, p] : e.q_double_schubert_all(r)) {
                         lhs += shift_y(p, k) * as_y_minus_z(classical.at(w.compose(w0)), k);
                       }
                       return Comparison{e.q_w0_double_determinant(r), lhs};
                     }});
    for (const Perm& w : all_permutations(k)) {
      cases.push_back({"interval/" + rank + "/w=" + id_of(w), CaseMode::Assert, [k, w](QuantumEngine& e) {
                         const AmbientRank r(k);
                         const auto quantum = e.q_double_schubert_all(r);
                         const auto classical = double_schubert_all(k);
                         const Perm w_inv = w.inverse();
                         Polynomial lhs;
                         for (const auto& [u, p] : quantum) {
                           const Perm v = u.compose(w_inv);
                           if (u.length() + v.length() != w.length()) continue;
                           lhs += shift_y(p, k) * as_y_minus_z(classical.at(v), k);
                         }
                         return Comparison{quantum.at(w), lhs};
                       }});
    }
  }
}

void schur_cases(int n, std::vector<Case>& cases) {
  for (int k = 2; k <= n; ++k) {
    for (int r = 1; r < k; ++r) {
      for (const Partition& lambda : partitions_in_box(r, k - r)) {
        const std::string tag = "lambda=" + id_of(lambda) + "/r=" + std::to_string(r) + "/n=" + std::to_string(k);
        cases.push_back({"quantized-schur/" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                           return Comparison{e.q_schur(lambda, r, AmbientRank(k)), e.quantize(schur(lambda, r), k)};
                         }});
        cases.push_back({"grassmannian-definition/" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                           const Perm w = grassmannian_permutation(lambda, r, k);
                           return Comparison{e.q_schur(lambda, r, AmbientRank(k)), e.q_schubert(w, AmbientRank(k))};
                         }});
      }
    }
  }
  for (int r = 1; r < n; ++r) {
    for (int k = 0; r + k <= n; ++k) {
      cases.push_back({"complete/k=" + std::to_string(k) + "/r=" + std::to_string(r), CaseMode::Assert,
                       [=](QuantumEngine& e) {
                         const int rank = std::max(r + k, r + 1);
                         return Comparison{e.quantize(complete(k, r), rank), e.q_complete(k, r)};
                       }});
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (const Perm& w : enumerate_class(k, PermClass::Dominant, std::max(k, kDefaultEnumerationCap))) {
      cases.push_back({"dominant/w=" + id_of(w), CaseMode::Assert, [=](QuantumEngine& e) {
                         const Partition lambda = shape(w);
                         Polynomial det = determinant(lambda.length(), [&](int i, int j) {
                           return e.q_complete(lambda.at(i) - i + j, i);
                         });
                         return Comparison{e.q_schubert(w, AmbientRank(k)), det};
                       }});
      cases.push_back({"dominant-monomial/w=" + id_of(w), CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{e.q_schubert(w, AmbientRank(k)),
                                           e.q_monomial(Composition{shape(w).parts()}, AmbientRank(k))};
                       }});
    }
    std::vector<Composition> alphas;
    compositions_below_staircase(k, alphas);
    for (const Composition& alpha : alphas) {
      std::string tag;
      for (int v : alpha.parts) tag += std::to_string(v);
      cases.push_back({"monomial/n=" + std::to_string(k) + "/alpha=" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{e.quantize(x_power(alpha), k), e.q_monomial(alpha, AmbientRank(k))};
                       }});
    }
    for (const Perm& w : all_permutations(k)) {
      if (k > 4) break;
      cases.push_back({"bjs/w=" + id_of(w), CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{e.q_schubert(w, AmbientRank(k)), e.q_bjs(w, AmbientRank(k))};
                       }});
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int m = 0; m <= n; ++m) {
      cases.push_back({"alternating-sum/n=" + std::to_string(k) + "/m=" + std::to_string(m), CaseMode::Assert,
                       [=](QuantumEngine& e) {
                         Polynomial sum;
                         for (int j = 0; j <= m; ++j) {
                           Polynomial t = e.q_elementary(m - j, k + m - 1) * e.q_complete(j, k);
                           if (j % 2) {
                             sum -= t;
                           } else {
                             sum += t;
                           }
                         }
                         return Comparison{Polynomial(m == 0 ? 1LL : 0LL), sum};
                       }});
    }
  }
  for (int r = 1; r <= std::min(n, 4); ++r) {
    for (const Partition& lambda : partitions_in_box(r, 4)) {
      cases.push_back({"jacobi-trudi/lambda=" + id_of(lambda) + "/r=" + std::to_string(r), CaseMode::Assert,
                       [=](QuantumEngine& e) {
                         const int rank = r + std::max(1, lambda.at(1));
                         return Comparison{e.q_schur(lambda, r, AmbientRank(rank)), e.q_schur_jacobi_trudi(lambda, r)};
                       }});
    }
  }
  if (n >= 3) {
    for (const Partition& lambda : partitions_in_box(3, 3)) {
      if (lambda.empty()) continue;
      cases.push_back({"duality/lambda=" + id_of(lambda), CaseMode::Report, [=](QuantumEngine& e) {
                         const int r = lambda.length();
                         const int m = lambda.at(1);
                         const Partition conj = lambda.conjugate();
                         Polynomial lhs = determinant(m, [&](int i, int j) {
                           return e.q_xy_elementary(conj.at(i) - i + j, r - 1 + j, std::max(0, r - conj.at(i) + i));
                         });
                         auto gamma = [&](int j) { return r + lambda.at(j) - conj.at(lambda.at(j)); };
                         Polynomial rhs = determinant(r, [&](int i, int j) {
                           return e.q_xy_complete(lambda.at(i) - i + j, r - j + 1, std::max(0, gamma(r - i + 1)));
                         });
                         return Comparison{lhs, rhs};
                       }});
    }
  }
}

void counterexample_cases(std::vector<Case>& cases) {
  auto qs = [](QuantumEngine& e, const char* w) {
    const Perm p = Perm::parse(w);
    return e.q_schubert(p, AmbientRank(p.rank()));
  };
  cases.push_back({"2431", CaseMode::Assert, [qs](QuantumEngine& e) {
                     return Comparison{qs(e, "2431"),
                                       e.q_theta_flagged(Perm::parse("2431")) - Polynomial::q(2) * Polynomial::q(3)};
                   }});
  // With +q2(x1+x2+x3) this does not hold; the minus sign does.
  cases.push_back({"2413-plus-q2", CaseMode::Report, [qs](QuantumEngine& e) {
                     const Polynomial sum = Polynomial::x(1) + Polynomial::x(2) + Polynomial::x(3);
                     return Comparison{qs(e, "2413"), e.q_theta_flagged(Perm::parse("2413")) + Polynomial::q(2) * sum};
                   }});
  cases.push_back({"2413-minus-q2", CaseMode::Assert, [qs](QuantumEngine& e) {
                     const Polynomial sum = Polynomial::x(1) + Polynomial::x(2) + Polynomial::x(3);
                     return Comparison{qs(e, "2413"), e.q_theta_flagged(Perm::parse("2413")) - Polynomial::q(2) * sum};
                   }});
  cases.push_back({"42513", CaseMode::Assert, [qs](QuantumEngine& e) {
                     return Comparison{e.q_theta_flagged(Perm::parse("42513")),
                                       qs(e, "42513") + Polynomial::q(3) * qs(e, "41235") * qs(e, "12354") -
                                           Polynomial::q(3) * qs(e, "51234")};
                   }});
  cases.push_back({"42513-q3-vanishing", CaseMode::Assert, [qs](QuantumEngine& e) {
                     return Comparison{substitute(qs(e, "42513"), Variable::q(3), 0),
                                       substitute(e.q_theta_flagged(Perm::parse("42513")), Variable::q(3), 0)};
                   }});
  cases.push_back({"42513-q3-derivative", CaseMode::Assert, [qs](QuantumEngine& e) {
                     return Comparison{-qs(e, "42135"), q_partial(qs(e, "42513"), 3)};
                   }});
}

void vexillary_cases(int n, std::vector<Case>& cases) {
  for (int k = 1; k <= n; ++k) {
    const AmbientRank rank(k);
    for (const Perm& w : enumerate_class(k, PermClass::RestrictedVexillary, std::max(k, kDefaultEnumerationCap))) {
      cases.push_back({"rv-single/w=" + id_of(w), CaseMode::Assert,
                       [=](QuantumEngine& e) { return Comparison{e.q_schubert(w, rank), e.q_rv(w)}; }});
      cases.push_back({"rv-double/w=" + id_of(w), CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{e.q_double_schubert(w, rank), e.q_rv_double(w, YFlagReading::RowIndex)};
                       }});
      cases.push_back({"rv-double-conjugate-index/w=" + id_of(w), CaseMode::Report, [=](QuantumEngine& e) {
                         return Comparison{e.q_double_schubert(w, rank),
                                           e.q_rv_double(w, YFlagReading::ConjugateIndex)};
                       }});
    }
    for (const Perm& w : enumerate_class(k, PermClass::Dominant, std::max(k, kDefaultEnumerationCap))) {
      cases.push_back({"dominant-double/w=" + id_of(w), CaseMode::Assert, [=](QuantumEngine& e) {
                         const Partition lambda = shape(w);
                         Polynomial det = determinant(lambda.length(), [&](int i, int j) {
                           return e.q_xy_complete(lambda.at(i) - i + j, i, lambda.at(i));
                         });
                         return Comparison{e.q_double_schubert(w, rank), det};
                       }});
    }
    if (k >= 2) {
      cases.push_back({"staircase/n=" + std::to_string(k), CaseMode::Assert, [=](QuantumEngine& e) {
                         std::vector<int> parts;
                         std::vector<FlaggedDifference> rows;
                         for (int i = 1; i < k; ++i) {
                           parts.push_back(k - i);
                           rows.push_back({i, k - i});
                         }
                         const SkewShape delta{Partition(parts), Partition{}};
                         return Comparison{e.q_w0_double_determinant(rank), e.q_multi_schur_rows(delta, rows)};
                       }});
    }
    for (const Perm& w : enumerate_class(k, PermClass::Vexillary, std::max(k, kDefaultEnumerationCap))) {
      cases.push_back({"vexillary-q-truncation/w=" + id_of(w), CaseMode::Report, [=](QuantumEngine& e) {
                         const Composition c = code(w);
                         int last = 1;
                         for (int i = 1; i <= c.size(); ++i) {
                           if (c.at(i) != 0) last = i;
                         }
                         return Comparison{drop_q_from(e.q_schubert(w, rank), last),
                                           drop_q_from(e.q_theta_flagged(w), last)};
                       }});
    }
  }
  counterexample_cases(cases);
}

void grassmannian_cases(int n, std::vector<Case>& cases) {
  for (int k = 1; k <= n; ++k) {
    const AmbientRank rank(k);
    for (const Perm& w : enumerate_class(k, PermClass::Grassmannian, std::max(k, kDefaultEnumerationCap))) {
      cases.push_back({"grassmannian-double/w=" + id_of(w), CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{e.q_double_schubert(w, rank), e.q_grassmannian_double(w, rank)};
                       }});
    }
    for (int r = 1; r < k; ++r) {
      const int s = k - r;
      const std::string tag = "r=" + std::to_string(r) + "/n=" + std::to_string(k);
      // u = w0(s) x w0(r); u w0 = (s+1, ..., n, 1, ..., s).
      const Perm u = cross_embed(Perm::longest(s), Perm::longest(r));
      const Perm top = u.compose(Perm::longest(k));
      cases.push_back({"factorial-cauchy/" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                         const Perm w0 = Perm::longest(k);
                         Polynomial lhs;
                         for (const Partition& lambda : partitions_in_box(r, s)) {
                           const Perm w = grassmannian_permutation(lambda, r, k);
                           lhs += shift_y(e.q_double_schubert(w, rank), k) *
                                  as_y_minus_z(double_schubert(w.compose(w0).compose(u)), k);
                         }
                         return Comparison{e.q_double_schubert(top, rank), lhs};
                       }});
      cases.push_back({"top-grassmannian/" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                         Polynomial det = determinant(s, [&](int i, int j) {
                           return e.q_xy_elementary(r - i + j, r - 1 + j, i);
                         });
                         return Comparison{e.q_double_schubert(top, rank), det};
                       }});
    }
  }
}

void factorization_cases(int n, std::vector<Case>& cases) {
  for (int m = 1; m < n; ++m) {
    for (int k = 1; m + k <= n; ++k) {
      for (const Perm& u : all_permutations(m)) {
        for (const Perm& v : all_permutations(k)) {
          cases.push_back({"cross-product/u=" + id_of(u) + "/v=" + id_of(v), CaseMode::Assert, [=](QuantumEngine& e) {
                             const AmbientRank rank(m + k);
                             return Comparison{e.q_schubert(cross_embed(u, v), rank),
                                               e.q_schubert(u.padded(m + k), rank) *
                                                   e.q_schubert(pad_embed(m, v), rank)};
                           }});
        }
      }
    }
  }
  for (int k = 2; k <= n; ++k) {
    for (const Perm& w : all_permutations(k)) {
      if (w(k) != 1) continue;
      std::vector<int> images;
      for (int i = 1; i < k; ++i) images.push_back(w(i) - 1);
      images.push_back(k);
      const Perm u(images);
      cases.push_back({"last-value-one/w=" + id_of(w), CaseMode::Assert, [=](QuantumEngine& e) {
                         const AmbientRank rank(k);
                         return Comparison{e.q_schubert(w, rank), e.q_schubert(u, rank) * e.q_elementary(k - 1, k - 1)};
                       }});
      // e~_n(X_n) is one degree too high; kept to record that it fails.
      cases.push_back({"last-value-one-top-degree/w=" + id_of(w), CaseMode::Report, [=](QuantumEngine& e) {
                         const AmbientRank rank(k);
                         return Comparison{e.q_schubert(w, rank), e.q_schubert(u, rank) * e.q_elementary(k, k)};
                       }});
    }
  }
}

void conjecture_cases(int n, std::vector<Case>& cases) {
  for (int k = 1; k <= n; ++k) {
    const AmbientRank rank(k);
    for (const Perm& w : enumerate_class(k, PermClass::Avoiding321, std::max(k, kDefaultEnumerationCap))) {
      cases.push_back({"skew-flagged/w=" + id_of(w), CaseMode::Report,
                       [=](QuantumEngine& e) { return Comparison{e.q_schubert(w, rank), e.q_skew_flagged(w)}; }});
      cases.push_back({"skew-double/w=" + id_of(w), CaseMode::Report, [=](QuantumEngine& e) {
                         return Comparison{e.q_double_schubert(w, rank),
                                           e.q_skew_double(w, ColumnFlagReading::RowLengthIndex)};
                       }});
      cases.push_back({"skew-double-direct/w=" + id_of(w), CaseMode::Report, [=](QuantumEngine& e) {
                         return Comparison{e.q_double_schubert(w, rank),
                                           e.q_skew_double(w, ColumnFlagReading::DirectIndex)};
                       }});
    }
  }
  if (n >= 4) {
    cases.push_back({"2413-displayed", CaseMode::Assert, [](QuantumEngine& e) {
                       const Perm w = Perm::parse("2413");
                       const SkewShape sigma(Partition({2, 2}), Partition({1}));
                       return Comparison{e.q_double_schubert(w, AmbientRank(4)), e.q_multi_schur(sigma, {1, 2}, {1, 3})};
                     }});
  }
}

void classical_cases(int n, std::vector<Case>& cases) {
  for (int k = 1; k <= n; ++k) {
    const AmbientRank rank(k);
    cases.push_back({"cauchy/n=" + std::to_string(k), CaseMode::Assert, [=](QuantumEngine&) {
                       const Perm w0 = Perm::longest(k);
                       Polynomial lhs;
                       const auto all = schubert_all(k);
                       for (const auto& [w, p] : all) lhs += p * x_to_y(all.at(w.compose(w0)));
                       Polynomial rhs(1LL);
                       for (int i = 1; i < k; ++i) {
                         for (int j = 1; i + j <= k; ++j) rhs *= Polynomial::x(i) + Polynomial::y(j);
                       }
                       return Comparison{rhs, lhs};
                     }});
    for (const Perm& w : all_permutations(k)) {
      const std::string tag = "/w=" + id_of(w);
      cases.push_back({"staircase" + tag, CaseMode::Assert,
                       [=](QuantumEngine&) { return Comparison{schubert_via_staircase(w), schubert(w)}; }});
      cases.push_back({"double-at-zero" + tag, CaseMode::Assert, [=](QuantumEngine&) {
                         return Comparison{schubert(w), zero_family(double_schubert(w), Family::Y)};
                       }});
      cases.push_back({"quantum-limit" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{schubert(w), zero_q(e.q_schubert(w, rank))};
                       }});
      cases.push_back({"quantum-double-limit" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{double_schubert(w), zero_q(e.q_double_schubert(w, rank))};
                       }});
      cases.push_back({"homogeneous" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                         const Polynomial p = e.q_schubert(w, rank);
                         return Comparison{p.homogeneous_component(w.length()), p};
                       }});
      cases.push_back({"quantize-basis" + tag, CaseMode::Assert, [=](QuantumEngine& e) {
                         return Comparison{e.q_schubert(w, rank), e.quantize(schubert(w), k)};
                       }});
      const Classification tags = classify(w);
      if (tags.grassmannian_descent) {
        cases.push_back({"grassmannian-schur" + tag, CaseMode::Assert, [=](QuantumEngine&) {
                           return Comparison{schubert(w), schur(shape(w), *tags.grassmannian_descent)};
                         }});
      }
      if (tags.has(PermClass::Vexillary)) {
        cases.push_back({"vexillary-flagged" + tag, CaseMode::Assert, [=](QuantumEngine&) {
                           return Comparison{schubert(w),
                                             flagged_schur(SkewShape(shape(w), Partition{}), flag_theta(w))};
                         }});
      }
      if (tags.has(PermClass::Avoiding321)) {
        cases.push_back({"skew-flagged" + tag, CaseMode::Assert, [=](QuantumEngine&) {
                           const SkewData data = skew_data(w);
                           return Comparison{schubert(w), flagged_schur(data.shape, data.flag)};
                         }});
      }
    }
  }
  // Degenerations of the determinantal objects.
  for (int k = 2; k <= n; ++k) {
    for (int r = 1; r < k; ++r) {
      for (const Partition& lambda : partitions_in_box(r, k - r)) {
        cases.push_back({"schur-limit/lambda=" + id_of(lambda) + "/r=" + std::to_string(r) + "/n=" + std::to_string(k),
                         CaseMode::Assert, [=](QuantumEngine& e) {
                           return Comparison{schur(lambda, r), zero_q(e.q_schur(lambda, r, AmbientRank(k)))};
                         }});
      }
    }
  }
  for (int k = 0; k <= n; ++k) {
    for (int r = 0; r <= n; ++r) {
      cases.push_back({"complete-limit/k=" + std::to_string(k) + "/r=" + std::to_string(r), CaseMode::Assert,
                       [=](QuantumEngine& e) { return Comparison{complete(k, r), zero_q(e.q_complete(k, r))}; }});
      cases.push_back({"elementary-limit/k=" + std::to_string(k) + "/r=" + std::to_string(r), CaseMode::Assert,
                       [=](QuantumEngine& e) { return Comparison{elementary(k, r), zero_q(e.q_elementary(k, r))}; }});
    }
  }
}

void stable_cases(std::vector<Case>& cases) {
  const Perm w = Perm::parse("321");
  for (int m = 0; m <= 4; ++m) {
    cases.push_back({"determinant/m=" + std::to_string(m), CaseMode::Assert, [=](QuantumEngine& e) {
                       Polynomial det = e.q_complete(2, m + 1) * e.q_complete(1, m + 2) - e.q_complete(3, m + 1);
                       return Comparison{det, e.stable_approx(w, m)};
                     }});
  }
  // Coefficients on monomials in x1..x3, q1..q3.
  auto window = [](const Polynomial& p) {
    return p.filter([](const Monomial& mono) {
      return mono.max_index(Family::X) <= 3 && mono.max_index(Family::Q) <= 3;
    });
  };
  for (int m = 3; m <= 4; ++m) {
    cases.push_back({"window/m=" + std::to_string(m), CaseMode::Assert, [=](QuantumEngine& e) {
                       using P = Polynomial;
                       P limit = schur(Partition({2, 1}), 3) + P::q(1) * (P::x(1) + P::x(2)) +
                                 P::q(2) * (P::x(2) + P::x(3)) + P::q(3) * P::x(3);
                       return Comparison{limit, window(e.stable_approx(w, m))};
                     }});
  }
  cases.push_back({"window-agreement/m=3,4", CaseMode::Assert, [=](QuantumEngine& e) {
                     return Comparison{window(e.stable_approx(w, 3)), window(e.stable_approx(w, 4))};
                   }});
}

}  // namespace

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classical", "cauchy",        "schur",       "vexillary",   "counterexamples",
                                              "grassmannian", "factorization", "conjectures", "stable"};
  return names;
}

bool is_known_suite(const std::string& name) {
  for (const auto& s : suite_names()) {
    if (s == name) return true;
  }
  return false;
}

namespace {

std::vector<Case> build(const std::string& suite, int n, bool slow, std::vector<std::string>& skipped) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  std::vector<Case> cases;
  if (suite == "cauchy") {
    cauchy_cases(n, slow, cases, skipped);
  } else if (suite == "schur") {
    schur_cases(n, cases);
  } else if (suite == "vexillary") {
    vexillary_cases(n, cases);
  } else if (suite == "counterexamples") {
    counterexample_cases(cases);
  } else if (suite == "grassmannian") {
    grassmannian_cases(n, cases);
  } else if (suite == "factorization") {
    factorization_cases(n, cases);
  } else if (suite == "conjectures") {
    conjecture_cases(n, cases);
  } else if (suite == "classical") {
    classical_cases(n, cases);
  } else if (suite == "stable") {
    stable_cases(cases);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  }
  return cases;
}

struct Outcome {
  bool holds = false;
  std::string expected;
  std::string actual;
  std::string error;
};

Outcome evaluate(const Case& c, QuantumEngine& engine) {
  Outcome out;
  try {
    Comparison cmp = c.eval(engine);
    out.holds = cmp.expected == cmp.actual;
    if (!out.holds) {
      out.expected = to_string(cmp.expected);
      out.actual = to_string(cmp.actual);
    }
  } catch (const std::exception& e) {
    out.error = e.what();
    out.expected = "(not evaluated)";
    out.actual = e.what();
  }
  return out;
}

}  // namespace

std::vector<Case> suite_cases(const std::string& suite, int n, bool slow) {
  std::vector<std::string> skipped;
  return build(suite, n, slow, skipped);
}

Report run_suite(const std::string& suite, const Config& config) {
  const auto start = std::chrono::steady_clock::now();
  Report report;
  report.suite = suite;
  report.n = config.n;
  std::vector<Case> cases = build(suite, config.n, config.slow || config.only_case.has_value(), report.skipped);
  if (config.only_case) {
    std::vector<Case> picked;
    for (auto& c : cases) {
      if (c.id == *config.only_case) picked.push_back(std::move(c));
    }
    if (picked.empty()) {
      throw Error(ErrorCode::InvalidArgument, "no case '" + *config.only_case + "' in suite " + suite);
    }
    cases = std::move(picked);
    report.skipped.clear();
  }
  QuantumEngine& engine = config.engine ? *config.engine : default_engine();

  std::vector<Outcome> outcomes(cases.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(cases.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) outcomes[i] = evaluate(cases[i], engine);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) outcomes[i] = evaluate(cases[i], engine);
      });
    }
    for (auto& th : pool) th.join();
  }

  report.cases = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (cases[i].mode == CaseMode::Report) {
      report.observations.push_back({cases[i].id, o.holds, o.error});
    } else if (!o.holds) {
      report.failures.push_back({cases[i].id, o.expected, o.actual});
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Report> run_all(const Config& config) {
  std::vector<Report> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, config));
  return out;
}

nlohmann::ordered_json to_json(const Report& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["n"] = report.n;
  j["cases"] = report.cases;
  j["passed"] = report.passed();
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"case", f.case_id}, {"expected", f.expected}, {"actual", f.actual}});
  }
  j["observations"] = nlohmann::ordered_json::array();
  for (const auto& o : report.observations) {
    nlohmann::ordered_json entry{{"case", o.case_id}, {"holds", o.holds}};
    if (!o.note.empty()) entry["note"] = o.note;
    j["observations"].push_back(entry);
  }
  j["skipped"] = report.skipped;
  if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  std::size_t holding = 0;
  for (const auto& o : report.observations) holding += o.holds ? 1 : 0;
  os << report.suite << " (n=" << report.n << "): " << report.cases << " cases, " << report.failures.size()
     << " failed";
  if (!report.observations.empty()) os << ", " << holding << "/" << report.observations.size() << " reported hold";
  os << " [" << static_cast<long long>(report.elapsed_ms) << " ms] " << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : report.failures) {
    os << "  FAIL " << f.case_id << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
  }
  for (const auto& o : report.observations) {
    if (!o.holds) os << "  reported miss " << o.case_id << (o.note.empty() ? "" : " (" + o.note + ")") << "\n";
  }
  for (const auto& s : report.skipped) os << "  skipped " << s << "\n";
  return os.str();
}

}  // namespace qsk::verify
