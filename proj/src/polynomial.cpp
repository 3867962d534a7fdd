#include "qsk/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace qsk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::InvalidCode: return "InvalidCode";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::ShapeOutOfBox: return "ShapeOutOfBox";
    case ErrorCode::CompositionOutOfBox: return "CompositionOutOfBox";
    case ErrorCode::Not321Avoiding: return "Not321Avoiding";
    case ErrorCode::NotRestrictedVexillary: return "NotRestrictedVexillary";
    case ErrorCode::NotGrassmannian: return "NotGrassmannian";
    case ErrorCode::BadFlag: return "BadFlag";
    case ErrorCode::ForeignVariables: return "ForeignVariables";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Monomial

int Monomial::slot(Variable v) {
  if (v.index < 1 || v.index > kMaxIndex) {
    throw Error(ErrorCode::CapacityExceeded,
                "variable index " + std::to_string(v.index) + " outside 1.." +
                    std::to_string(kMaxIndex));
  }
  return static_cast<int>(v.family) * kMaxIndex + (v.index - 1);
}

Variable Monomial::variable_at(int slot) {
  return {static_cast<Family>(slot / kMaxIndex), slot % kMaxIndex + 1};
}

static int weight_of_slot(int slot) { return slot >= 2 * kMaxIndex ? 2 : 1; }

Monomial::Monomial(Variable v, int exponent) { set(slot(v), exponent); }

void Monomial::set(int s, int e) {
  if (e < 0 || e > 255) {
    throw Error(ErrorCode::CapacityExceeded, "exponent " + std::to_string(e) + " out of range");
  }
  degree_ = static_cast<std::uint16_t>(degree_ - weight_of_slot(s) * exps_[s] +
                                       weight_of_slot(s) * e);
  exps_[s] = static_cast<std::uint8_t>(e);
}

int Monomial::family_degree(Family f) const {
  int base = static_cast<int>(f) * kMaxIndex;
  int d = 0;
  for (int i = 0; i < kMaxIndex; ++i) d += exps_[base + i];
  return d;
}

int Monomial::max_index(Family f) const {
  int base = static_cast<int>(f) * kMaxIndex;
  for (int i = kMaxIndex - 1; i >= 0; --i) {
    if (exps_[base + i] != 0) return i + 1;
  }
  return 0;
}

Monomial Monomial::with_exponent(Variable v, int e) const {
  Monomial m = *this;
  m.set(slot(v), e);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int s = 0; s < kSlots; ++s) {
    int e = exps_[s] + other.exps_[s];
    if (e > 255) throw Error(ErrorCode::CapacityExceeded, "exponent overflow in product");
    m.exps_[s] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

Monomial Monomial::only(Family f) const {
  Monomial m;
  int base = static_cast<int>(f) * kMaxIndex;
  for (int i = 0; i < kMaxIndex; ++i) m.set(base + i, exps_[base + i]);
  return m;
}

Monomial Monomial::without(Family f) const {
  Monomial m = *this;
  int base = static_cast<int>(f) * kMaxIndex;
  for (int i = 0; i < kMaxIndex; ++i) m.set(base + i, 0);
  return m;
}

bool precedes(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  return std::memcmp(a.exps_.data(), b.exps_.data(), Monomial::kSlots) > 0;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[kSlots / 8];
  std::memcpy(words, exps_.data(), kSlots);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

using Accumulator = std::unordered_map<Monomial, Integer, MonomialHash>;

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return precedes(a.monomial, b.monomial); });
}

Polynomial from_accumulator(Accumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  sort_terms(terms);
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace

Polynomial::Polynomial(long long c) {
  if (c != 0) terms_.push_back({Monomial{}, Integer(c)});
}

Polynomial::Polynomial(const Integer& c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Polynomial::Polynomial(Variable v) { terms_.push_back({Monomial(v), Integer(1)}); }

Polynomial::Polynomial(const Monomial& m, Integer c) {
  if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  bool sorted_unique = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff.is_zero() ||
        (i > 0 && !precedes(terms[i - 1].monomial, terms[i].monomial))) {
      sorted_unique = false;
      break;
    }
  }
  Polynomial p;
  if (sorted_unique) {
    p.terms_ = std::move(terms);
    return p;
  }
  sort_terms(terms);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  p.terms_ = std::move(merged);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return precedes(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

Polynomial Polynomial::homogeneous_component(int d) const {
  return filter([d](const Monomial& m) { return m.degree() == d; });
}

Polynomial Polynomial::family_component(Family f, int d) const {
  return filter([f, d](const Monomial& m) { return m.family_degree(f) == d; });
}

int Polynomial::max_index(Family f) const {
  int best = 0;
  for (const auto& t : terms_) best = std::max(best, t.monomial.max_index(f));
  return best;
}

Polynomial Polynomial::filter(const std::function<bool(const Monomial&)>& keep) const {
  Polynomial out;
  for (const auto& t : terms_) {
    if (keep(t.monomial)) out.terms_.push_back(t);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::add_scaled(const Polynomial& a, const Polynomial& b, int sign) {
  Polynomial out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && precedes(ia->monomial, ib->monomial))) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || precedes(ib->monomial, ia->monomial)) {
      out.terms_.push_back({ib->monomial, sign > 0 ? ib->coeff : Integer(-ib->coeff)});
      ++ib;
    } else {
      Integer c = ia->coeff;
      if (sign > 0) {
        c += ib->coeff;
      } else {
        c -= ib->coeff;
      }
      if (!c.is_zero()) out.terms_.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& r) {
  if (r.is_zero()) return *this;
  *this = add_scaled(*this, r, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& r) {
  if (r.is_zero()) return *this;
  *this = add_scaled(*this, r, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& r) {
  *this = *this * r;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 || b.size() == 1) {
    // A single term keeps the order, so no sorting is needed.
    const Polynomial& single = a.size() == 1 ? a : b;
    const Polynomial& other = a.size() == 1 ? b : a;
    const Term& s = single.terms_.front();
    Polynomial out;
    out.terms_.reserve(other.size());
    for (const auto& t : other.terms_) out.terms_.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
    return out;
  }
  Accumulator acc;
  acc.reserve(a.size() * b.size() / 2 + 16);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial);
      if (inserted) {
        it->second = ta.coeff * tb.coeff;
      } else {
        it->second += ta.coeff * tb.coeff;
      }
    }
  }
  return from_accumulator(acc);
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  Polynomial result(1LL);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial arith(const Polynomial& p, const Polynomial& r, ArithKind kind) {
  switch (kind) {
    case ArithKind::Add: return p + r;
    case ArithKind::Sub: return p - r;
    case ArithKind::Mul: return p * r;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Substitutions

Polynomial substitute(const Polynomial& p, Variable v, const Polynomial& r) {
  const int s = Monomial::slot(v);
  std::vector<Polynomial> powers{Polynomial(1LL)};
  // Group terms by exponent of v so each power of r multiplies once.
  std::map<int, std::vector<Term>> by_exponent;
  for (const auto& t : p.terms()) {
    int e = t.monomial.exponent_at(s);
    by_exponent[e].push_back({t.monomial.with_exponent(v, 0), t.coeff});
  }
  Polynomial out;
  for (auto& [e, terms] : by_exponent) {
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * r);
    out += Polynomial::from_terms(std::move(terms)) * powers[e];
  }
  return out;
}

Polynomial relabel(const Polynomial& p, const std::function<Relabel(Variable)>& map) {
  std::array<Relabel, Monomial::kSlots> table;
  for (int s = 0; s < Monomial::kSlots; ++s) table[s] = map(Monomial::variable_at(s));
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    int sign = 1;
    bool zero = false;
    for (int s = 0; s < Monomial::kSlots && !zero; ++s) {
      int e = t.monomial.exponent_at(s);
      if (e == 0) continue;
      const Relabel& r = table[s];
      if (r.target.index == 0) {
        zero = true;
        break;
      }
      if (r.sign < 0 && (e & 1)) sign = -sign;
      m = m * Monomial(r.target, e);
    }
    if (!zero) terms.push_back({m, sign > 0 ? t.coeff : Integer(-t.coeff)});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial zero_family(const Polynomial& p, Family f) {
  return p.filter([f](const Monomial& m) { return m.family_degree(f) == 0; });
}

Polynomial adjacent_transpose(const Polynomial& p, Family family, int i) {
  if (family == Family::Q) throw Error(ErrorCode::InvalidArgument, "q variables are not permuted");
  const int a = Monomial::slot({family, i});
  const int b = Monomial::slot({family, i + 1});
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    int ea = t.monomial.exponent_at(a);
    int eb = t.monomial.exponent_at(b);
    Monomial m = t.monomial.with_exponent({family, i}, eb).with_exponent({family, i + 1}, ea);
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial exact_linear_div(const Polynomial& p, Family family, int i) {
  const Variable va{family, i};
  const Variable vb{family, i + 1};
  // For each cofactor monomial R and each total degree d in (a, b), the
  // chunk sum_k c_k a^k b^(d-k) is divided by (a - b) synthetically:
  // u_{d-1} = c_d, u_{k-1} = c_k + u_k, and the remainder is c_0 + u_0.
  std::unordered_map<Monomial, std::map<int, std::map<int, Integer>>, MonomialHash> groups;
  for (const auto& t : p.terms()) {
    int ka = t.monomial.exponent(va);
    int kb = t.monomial.exponent(vb);
    Monomial rest = t.monomial.with_exponent(va, 0).with_exponent(vb, 0);
    groups[rest][ka + kb][ka] += t.coeff;
  }
  std::vector<Term> out;
  for (auto& [rest, by_degree] : groups) {
    for (auto& [d, coeffs] : by_degree) {
      if (d == 0) {
        throw Error(ErrorCode::NotDivisible, "constant chunk is not divisible by the linear form");
      }
      Integer u = 0;  // u_k, walking k from d down to 1
      for (int k = d; k >= 1; --k) {
        auto it = coeffs.find(k);
        Integer ck = it == coeffs.end() ? Integer(0) : it->second;
        u = ck + u;  // this is u_{k-1}
        if (!u.is_zero()) {
          Monomial m = rest.with_exponent(va, k - 1).with_exponent(vb, d - k);
          out.push_back({m, u});
        }
      }
      auto it0 = coeffs.find(0);
      Integer c0 = it0 == coeffs.end() ? Integer(0) : it0->second;
      if (!Integer(c0 + u).is_zero()) {
        throw Error(ErrorCode::NotDivisible, "nonzero remainder dividing by (" + to_string(va) + " - " +
                                                 to_string(vb) + ")");
      }
    }
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial restrict(const Polynomial& p, int m) {
  return p.filter([m](const Monomial& mono) {
    return mono.max_index(Family::X) <= m && mono.max_index(Family::Q) < m;
  });
}

Polynomial q_partial(const Polynomial& p, int i) {
  const Variable v = Variable::q(i);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    int e = t.monomial.exponent(v);
    if (e == 0) continue;
    terms.push_back({t.monomial.with_exponent(v, e - 1), t.coeff * e});
  }
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result = parse_sum();
    if (!at_end()) fail("unbalanced ')'");
    return result;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    std::string d = digits();
    if (d.size() > 4) fail("number too large");
    return std::stoi(d);
  }

  // Signed terms up to the end of input or a closing parenthesis.
  Polynomial parse_sum() {
    skip_space();
    if (at_end() || peek() == ')') fail("empty expression");
    Polynomial result;
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Polynomial term = parse_term();
      result += sign > 0 ? term : -term;
      skip_space();
      if (at_end() || peek() == ')') break;
    }
    return result;
  }

  int exponent() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    skip_space();
    return small_int();
  }

  Polynomial parse_term() {
    Polynomial term(1LL);
    while (true) {
      skip_space();
      term *= parse_factor();
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return term;
  }

  Polynomial parse_factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(Integer(digits()));
    if (c == '(') {
      ++pos_;
      Polynomial inner = parse_sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner.pow(exponent());
    }
    Family f;
    switch (c) {
      case 'x': f = Family::X; break;
      case 'y':
      case 'a': f = Family::Y; break;
      case 'q': f = Family::Q; break;
      default: fail(std::string("unexpected character '") + c + "'");
    }
    ++pos_;
    int index = small_int();
    if (index < 1) fail("variable index must be positive");
    return Polynomial(Monomial(Variable{f, index}, exponent()));
  }
};

char family_letter(Family f, const FormatOptions& opts) {
  switch (f) {
    case Family::X: return 'x';
    case Family::Y: return opts.y_letter;
    case Family::Q: return 'q';
  }
  return '?';
}

// Display order inside a monomial: q first, then x, then y.
constexpr Family kDisplayOrder[] = {Family::Q, Family::X, Family::Y};

std::string monomial_text(const Monomial& m, const FormatOptions& opts) {
  std::string out;
  for (Family f : kDisplayOrder) {
    for (int i = 1; i <= kMaxIndex; ++i) {
      int e = m.exponent({f, i});
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += family_letter(f, opts);
      out += std::to_string(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string to_string(Variable v, FormatOptions opts) {
  return family_letter(v.family, opts) + std::to_string(v.index);
}

std::string to_string(const Polynomial& p, FormatOptions opts) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(t.monomial, opts);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace qsk
