#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsk/error.hpp"

namespace qsk {

using Integer = boost::multiprecision::cpp_int;

enum class Family : std::uint8_t { X = 0, Y = 1, Q = 2 };

/// Largest variable index representable in a Monomial, per family.
inline constexpr int kMaxIndex = 16;

struct Variable {
  Family family;
  int index;  // >= 1

  static Variable x(int i) { return {Family::X, i}; }
  static Variable y(int i) { return {Family::Y, i}; }
  static Variable q(int i) { return {Family::Q, i}; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Power product over the x, y and q families.
///
/// Exponents are stored densely, one byte per variable slot, in the order
/// x1..x16, y1..y16, q1..q16. That layout makes a bytewise comparison
/// equal to the lexicographic part of the canonical order.
class Monomial {
 public:
  static constexpr int kSlots = 3 * kMaxIndex;

  Monomial() = default;
  explicit Monomial(Variable v, int exponent = 1);

  int exponent(Variable v) const { return exps_[slot(v)]; }
  int exponent_at(int slot) const { return exps_[slot]; }
  /// Weighted degree: x and y count 1, q counts 2.
  int degree() const { return degree_; }
  int family_degree(Family f) const;
  bool is_one() const { return degree_ == 0; }

  /// Largest index with a nonzero exponent in `f`, or 0.
  int max_index(Family f) const;

  Monomial with_exponent(Variable v, int e) const;
  Monomial operator*(const Monomial& other) const;

  /// Restricted to the slots of `f`; the others are zeroed.
  Monomial only(Family f) const;
  /// The slots of `f` are zeroed.
  Monomial without(Family f) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Canonical (descending) order: higher weighted degree first, then
  /// lexicographic with x1 > x2 > ... > y1 > ... > q1 > ...
  friend bool precedes(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

  static int slot(Variable v);
  static Variable variable_at(int slot);

 private:
  std::array<std::uint8_t, kSlots> exps_{};
  std::uint16_t degree_ = 0;

  void set(int slot, int e);
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with integer coefficients in canonical form: terms
/// sorted by `precedes`, no zero coefficients, the zero polynomial empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long c);  // NOLINT: integers promote implicitly
  Polynomial(const Integer& c);
  Polynomial(Variable v);  // NOLINT
  Polynomial(const Monomial& m, Integer c = 1);

  /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(std::vector<Term> terms);

  static Polynomial x(int i) { return Polynomial(Variable::x(i)); }
  static Polynomial y(int i) { return Polynomial(Variable::y(i)); }
  static Polynomial q(int i) { return Polynomial(Variable::q(i)); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Integer constant_term() const;
  Integer coefficient(const Monomial& m) const;

  /// Weighted total degree, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  /// The part of weighted degree exactly `d`.
  Polynomial homogeneous_component(int d) const;
  /// Terms whose `f`-degree equals `d`.
  Polynomial family_component(Family f, int d) const;
  int max_index(Family f) const;
  bool involves(Family f) const { return max_index(f) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& r);
  Polynomial& operator-=(const Polynomial& r);
  Polynomial& operator*=(const Polynomial& r);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Keeps the terms for which `keep` holds.
  Polynomial filter(const std::function<bool(const Monomial&)>& keep) const;

 private:
  std::vector<Term> terms_;

  static Polynomial add_scaled(const Polynomial& a, const Polynomial& b, int sign);
};

enum class ArithKind { Add, Sub, Mul };
Polynomial arith(const Polynomial& p, const Polynomial& r, ArithKind kind);

/// Replaces every occurrence of `v` by `r` and expands.
Polynomial substitute(const Polynomial& p, Variable v, const Polynomial& r);

/// Monomial-wise renaming: each variable is sent to a variable, possibly
/// negated. Variables mapped to nullopt-like `{family, 0}` are set to zero.
struct Relabel {
  Variable target;
  int sign = 1;  // +1 or -1
};
Polynomial relabel(const Polynomial& p, const std::function<Relabel(Variable)>& map);

/// Sets every variable of family `f` to zero.
Polynomial zero_family(const Polynomial& p, Family f);

/// s_i: swaps v_i and v_{i+1} of the given family.
Polynomial adjacent_transpose(const Polynomial& p, Family family, int i);

/// Exact quotient by (v_i - v_{i+1}); throws NotDivisible on a nonzero remainder.
Polynomial exact_linear_div(const Polynomial& p, Family family, int i);

/// x_j -> 0 for j > m and q_j -> 0 for j >= m; y untouched.
Polynomial restrict(const Polynomial& p, int m);

Polynomial q_partial(const Polynomial& p, int i);

/// Parses `3*x1^2*x2 - q1*(x1 + a2)^2 + 7`; `a<k>` is read as y<k>.
Polynomial parse_polynomial(std::string_view text);

struct FormatOptions {
  char y_letter = 'y';
};
std::string to_string(const Polynomial& p, FormatOptions opts = {});
std::string to_string(Variable v, FormatOptions opts = {});
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace qsk
