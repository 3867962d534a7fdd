#include "qsk/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qsk {

// ---------------------------------------------------------------------------
// Composition / Partition / SkewShape / Flag

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "parts must be positive and weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 1; j <= at(1); ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Partition Partition::complement(int r, int s) const {
  if (!fits_in_box(r, s)) {
    throw Error(ErrorCode::ShapeOutOfBox, "partition does not fit in the " + std::to_string(r) + "x" +
                                              std::to_string(s) + " box");
  }
  std::vector<int> out(r);
  for (int i = 1; i <= r; ++i) out[i - 1] = s - at(r + 1 - i);
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i) {
    if (inner.at(i) > at(i)) return false;
  }
  return true;
}

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
  if (!outer.contains(inner)) throw Error(ErrorCode::InvalidArgument, "inner shape not contained in outer");
}

Flag::Flag(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] <= 0 || (i > 0 && entries_[i] < entries_[i - 1])) {
      throw Error(ErrorCode::BadFlag, "flag entries must be positive and weakly increasing");
    }
  }
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > rank() || seen[v]) {
      throw Error(ErrorCode::InvalidArgument, "not a permutation of 1.." + std::to_string(rank()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i, int n) { return identity(n).times_simple(i); }

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    images = parse_int_list(text);
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw Error(ErrorCode::ParseError, "bad permutation '" + std::string(text) + "'");
      }
      images.push_back(c - '0');
    }
  }
  if (images.empty()) throw Error(ErrorCode::ParseError, "empty permutation");
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a permutation");
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < rank(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int count = 0;
  for (int i = 0; i < rank(); ++i) {
    for (int j = i + 1; j < rank(); ++j) count += images_[i] > images_[j] ? 1 : 0;
  }
  return count;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < rank(); ++i) {
    if (images_[i - 1] > images_[i]) d.push_back(i);
  }
  return d;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < rank(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (rank() != other.rank()) throw Error(ErrorCode::RankMismatch, "compose needs equal ranks");
  std::vector<int> out(images_.size());
  for (int i = 0; i < rank(); ++i) out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= rank()) throw Error(ErrorCode::InvalidArgument, "simple transposition out of range");
  Permutation out = *this;
  std::swap(out.images_[i - 1], out.images_[i]);
  return out;
}

Permutation Permutation::simple_times(int i) const {
  if (i < 1 || i >= rank()) throw Error(ErrorCode::InvalidArgument, "simple transposition out of range");
  Permutation out = *this;
  for (int& v : out.images_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return out;
}

Permutation Permutation::padded(int n) const {
  if (n < rank()) throw Error(ErrorCode::RankMismatch, "cannot pad to a smaller rank");
  Permutation out = *this;
  for (int v = rank() + 1; v <= n; ++v) out.images_.push_back(v);
  return out;
}

Permutation Permutation::trimmed() const {
  Permutation out = *this;
  while (out.images_.size() > 1 && out.images_.back() == static_cast<int>(out.images_.size())) {
    out.images_.pop_back();
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  bool wide = rank() > 9;
  for (int i = 0; i < rank(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (int i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts()[i];
  return os << ')';
}

// ---------------------------------------------------------------------------
// Codes

Composition code(const Permutation& w) {
  Composition c;
  c.parts.resize(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    int count = 0;
    for (int j = i + 1; j <= w.rank(); ++j) count += w(j) < w(i) ? 1 : 0;
    c.parts[i - 1] = count;
  }
  return c;
}

Permutation from_code(const Composition& c, std::optional<int> rank) {
  int minimal = std::max(1, c.size());
  for (int i = 1; i <= c.size(); ++i) {
    if (c.at(i) < 0) throw Error(ErrorCode::InvalidCode, "negative code entry");
    minimal = std::max(minimal, i + c.at(i));
  }
  int n = rank.value_or(minimal);
  if (n < minimal) {
    throw Error(ErrorCode::InvalidCode, "code needs rank " + std::to_string(minimal) + ", got " +
                                            std::to_string(n));
  }
  std::vector<int> available(n);
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> images;
  images.reserve(n);
  for (int i = 1; i <= n; ++i) {
    int k = c.at(i);
    images.push_back(available[k]);
    available.erase(available.begin() + k);
  }
  return Permutation(std::move(images));
}

Partition shape(const Permutation& w) {
  std::vector<int> parts = code(w).parts;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Patterns

bool avoids(const Permutation& w, const Permutation& pattern) {
  const int n = w.rank();
  const int k = pattern.rank();
  if (k > n) return true;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    // Does w restricted to idx have the relative order of the pattern?
    bool match = true;
    for (int a = 0; a < k && match; ++a) {
      for (int b = a + 1; b < k && match; ++b) {
        bool lt_w = w.images()[idx[a]] < w.images()[idx[b]];
        bool lt_p = pattern.images()[a] < pattern.images()[b];
        match = lt_w == lt_p;
      }
    }
    if (match) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string_view to_string(PermClass c) {
  switch (c) {
    case PermClass::Dominant: return "dominant";
    case PermClass::Grassmannian: return "grassmannian";
    case PermClass::Vexillary: return "vexillary";
    case PermClass::RestrictedVexillary: return "rv";
    case PermClass::Avoiding321: return "avoiding321";
    case PermClass::Smooth: return "smooth";
  }
  return "?";
}

std::optional<PermClass> parse_perm_class(std::string_view tag) {
  for (PermClass c : {PermClass::Dominant, PermClass::Grassmannian, PermClass::Vexillary,
                      PermClass::RestrictedVexillary, PermClass::Avoiding321, PermClass::Smooth}) {
    if (to_string(c) == tag) return c;
  }
  return std::nullopt;
}

namespace {

const Permutation& pattern(std::string_view text) {
  static std::map<std::string, Permutation, std::less<>> cache = [] {
    std::map<std::string, Permutation, std::less<>> m;
    for (const char* p : {"132", "321", "2143", "2413", "2431", "3142", "1324"}) {
      m.emplace(p, Permutation::parse(p));
    }
    return m;
  }();
  return cache.find(text)->second;
}

}  // namespace

bool is_in_class(const Permutation& w, PermClass c) {
  switch (c) {
    case PermClass::Dominant: return avoids(w, pattern("132"));
    case PermClass::Grassmannian: return w.descents().size() <= 1;
    case PermClass::Vexillary: return avoids(w, pattern("2143"));
    case PermClass::RestrictedVexillary:
      return avoids(w, pattern("2143")) && avoids(w, pattern("2413")) && avoids(w, pattern("2431"));
    case PermClass::Avoiding321: return avoids(w, pattern("321"));
    case PermClass::Smooth: return avoids(w, pattern("2143")) && avoids(w, pattern("1324"));
  }
  return false;
}

Classification classify(const Permutation& w) {
  Classification out;
  for (PermClass c : {PermClass::Dominant, PermClass::Grassmannian, PermClass::Vexillary,
                      PermClass::RestrictedVexillary, PermClass::Avoiding321, PermClass::Smooth}) {
    if (is_in_class(w, c)) out.tags.insert(c);
  }
  auto d = w.descents();
  if (d.size() == 1) out.grassmannian_descent = d.front();
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> enumerate_class(int n, PermClass c, int max_n) {
  if (n > max_n) {
    throw Error(ErrorCode::RankTooLarge, "rank " + std::to_string(n) + " exceeds cap " + std::to_string(max_n));
  }
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n)) {
    if (is_in_class(w, c)) out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Flags

namespace {

Flag theta_impl(const Permutation& w, bool last) {
  const Composition c = code(w);
  const int n = c.size();
  std::vector<int> g;
  for (int i = 1; i <= n; ++i) {
    if (c.at(i) == 0) continue;
    int exceed = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (c.at(j) > c.at(i)) {
        exceed = j;
        if (!last) break;
      }
    }
    g.push_back(exceed == 0 ? i : exceed);
  }
  std::sort(g.begin(), g.end());
  return Flag(std::move(g));
}

}  // namespace

Flag flag_theta(const Permutation& w) { return theta_impl(w, true); }

Flag flag_theta_first_exceeding(const Permutation& w) { return theta_impl(w, false); }

SkewData skew_data(const Permutation& w) {
  if (!avoids(w, pattern("321"))) {
    throw Error(ErrorCode::Not321Avoiding, w.to_string() + " contains 321");
  }
  const Composition c = code(w);
  std::vector<int> positions;
  for (int j = 1; j <= c.size(); ++j) {
    if (c.at(j) > 0) positions.push_back(j);
  }
  const int rows = static_cast<int>(positions.size());
  // Row k occupies columns [k - p_k - c_{p_k} + 1, k - p_k]; translate so the
  // smallest inner boundary sits at zero.
  std::vector<int> right(rows), left(rows);
  int shift = 0;
  for (int k = 1; k <= rows; ++k) {
    int p = positions[k - 1];
    right[k - 1] = k - p;
    left[k - 1] = right[k - 1] - c.at(p) + 1;
    shift = k == 1 ? left[0] - 1 : std::min(shift, left[k - 1] - 1);
  }
  std::vector<int> outer(rows), inner(rows);
  for (int k = 0; k < rows; ++k) {
    outer[k] = right[k] - shift;
    inner[k] = left[k] - 1 - shift;
  }
  return {SkewShape(Partition(outer), Partition(inner)), Flag(positions)};
}

// ---------------------------------------------------------------------------
// Words

Word reduced_word(const Permutation& w) {
  Word word;
  Permutation u = w;
  while (true) {
    auto d = u.descents();
    if (d.empty()) break;
    word.push_back(d.back());
    u = u.times_simple(d.back());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace {

const std::vector<Word>& words_memo(const Permutation& w, std::map<Permutation, std::vector<Word>>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  std::vector<Word> out;
  auto d = w.descents();
  if (d.empty()) {
    out.push_back({});
  } else {
    for (int i : d) {
      for (const Word& prefix : words_memo(w.times_simple(i), memo)) {
        Word word = prefix;
        word.push_back(i);
        out.push_back(std::move(word));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return memo.emplace(w, std::move(out)).first->second;
}

void compatible_dfs(const Word& a, std::size_t pos, Word& b, std::vector<Word>& out) {
  if (pos == a.size()) {
    out.push_back(b);
    return;
  }
  int lo = 1;
  if (pos > 0) lo = b[pos - 1] + (a[pos - 1] < a[pos] ? 1 : 0);
  for (int v = lo; v <= a[pos]; ++v) {
    b.push_back(v);
    compatible_dfs(a, pos + 1, b, out);
    b.pop_back();
  }
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w) {
  std::map<Permutation, std::vector<Word>> memo;
  return words_memo(w, memo);
}

Word left_ascent_word(const Permutation& w) {
  Word word;
  Permutation u = w;
  while (true) {
    const Permutation inv = u.inverse();
    int step = 0;
    for (int i = 1; i < u.rank() && step == 0; ++i) {
      if (inv(i) < inv(i + 1)) step = i;
    }
    if (step == 0) return word;
    word.push_back(step);
    u = u.simple_times(step);
  }
}

std::vector<Word> compatible_sequences(const Word& a) {
  std::vector<Word> out;
  Word b;
  compatible_dfs(a, 0, b, out);
  return out;
}

// ---------------------------------------------------------------------------
// Embeddings

Permutation cross_embed(const Permutation& u, const Permutation& v) {
  std::vector<int> images = u.images();
  for (int x : v.images()) images.push_back(x + u.rank());
  return Permutation(std::move(images));
}

Permutation pad_embed(int m, const Permutation& v) {
  if (m == 0) return v;
  return cross_embed(Permutation::identity(m), v);
}

Permutation grassmannian_permutation(const Partition& lambda, int r, int n) {
  if (r < 0 || r > n || !lambda.fits_in_box(r, n - r)) {
    throw Error(ErrorCode::ShapeOutOfBox, "shape does not fit the " + std::to_string(r) + "x" +
                                              std::to_string(n - r) + " box");
  }
  Composition c;
  c.parts.resize(n, 0);
  for (int i = 1; i <= r; ++i) c.parts[i - 1] = lambda.at(r + 1 - i);
  return from_code(c, n);
}

// ---------------------------------------------------------------------------
// Text helpers

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string s(text);
  if (s == "()" || s.empty()) return out;
  if (s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + item + "' in '" + std::string(text) + "'");
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used != item.size()) throw Error(ErrorCode::ParseError, "bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  try {
    return Partition(parse_int_list(text));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a partition");
  }
}

Composition parse_composition(std::string_view text) {
  Composition c{parse_int_list(text)};
  for (int p : c.parts) {
    if (p < 0) throw Error(ErrorCode::ParseError, "negative composition part");
  }
  return c;
}

}  // namespace qsk
