#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qsk/error.hpp"

namespace qsk {

/// Finite sequence of nonnegative integers (a code, an exponent vector).
struct Composition {
  std::vector<int> parts;

  int size() const { return static_cast<int>(parts.size()); }
  int at(int i) const { return i >= 1 && i <= size() ? parts[i - 1] : 0; }  // 1-based, zero padded
  int sum() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Weakly decreasing positive parts; trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;  // |lambda|
  int at(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }  // 1-based
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// Complement inside the r x s box: lambda^_i = s - lambda_{r+1-i}.
  Partition complement(int r, int s) const;
  bool contains(const Partition& inner) const;
  bool fits_in_box(int rows, int cols) const { return length() <= rows && at(1) <= cols; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  int rows() const { return outer.length(); }
  int row_length(int i) const { return outer.at(i) - inner.at(i); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

/// Weakly increasing sequence of positive integers.
class Flag {
 public:
  Flag() = default;
  explicit Flag(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  int at(int i) const { return entries_.at(i - 1); }  // 1-based

  friend bool operator==(const Flag&, const Flag&) = default;

 private:
  std::vector<int> entries_;
};

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation, values 1..n. Throws InvalidArgument if not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// Simple transposition s_i in S_n.
  static Permutation simple(int i, int n);
  /// "13524" for rank <= 9, or "10,3,1,...".
  static Permutation parse(std::string_view text);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }  // 1-based
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;
  std::vector<int> descents() const;
  bool is_identity() const;
  /// (this * other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  /// Right multiplication by s_i: swaps positions i and i+1.
  Permutation times_simple(int i) const;
  /// Left multiplication by s_i: swaps the values i and i+1.
  Permutation simple_times(int i) const;

  /// Appends fixed points up to rank n (n >= rank()).
  Permutation padded(int n) const;
  /// Drops trailing fixed points, keeping rank >= 1.
  Permutation trimmed() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);
std::ostream& operator<<(std::ostream& os, const Partition& p);

// -- Codes and shapes --------------------------------------------------------

/// c_i = #{j > i : w_j < w_i}; length rank(w).
Composition code(const Permutation& w);
/// Inverse of `code`. The rank is the smallest admitting c, and at least
/// c.size(); a larger rank may be requested. Throws InvalidCode.
Permutation from_code(const Composition& c, std::optional<int> rank = std::nullopt);
Partition shape(const Permutation& w);

// -- Patterns and classes ----------------------------------------------------

bool avoids(const Permutation& w, const Permutation& pattern);

enum class PermClass { Dominant, Grassmannian, Vexillary, RestrictedVexillary, Avoiding321, Smooth };

std::string_view to_string(PermClass c);
std::optional<PermClass> parse_perm_class(std::string_view tag);

struct Classification {
  std::set<PermClass> tags;
  /// The unique descent of a Grassmannian permutation (absent for the identity).
  std::optional<int> grassmannian_descent;

  bool has(PermClass c) const { return tags.count(c) != 0; }
};

Classification classify(const Permutation& w);
bool is_in_class(const Permutation& w, PermClass c);

inline constexpr int kDefaultEnumerationCap = 7;
/// All w in S_n carrying `c`, in lexicographic order. Throws RankTooLarge.
std::vector<Permutation> enumerate_class(int n, PermClass c, int max_n = kDefaultEnumerationCap);
std::vector<Permutation> all_permutations(int n);

// -- Flags -------------------------------------------------------------------

/// Sorted statistics g_i over the nonzero code entries, where g_i = i when no
/// later code entry exceeds c_i, and otherwise the last j > i with c_j > c_i.
Flag flag_theta(const Permutation& w);

/// Variant of `flag_theta` taking the first (rather than the last) later
/// position whose code entry exceeds c_i.
Flag flag_theta_first_exceeding(const Permutation& w);

struct SkewData {
  SkewShape shape;
  Flag flag;  // positions of the nonzero code entries
};

/// Skew shape and flag of a 321-avoiding permutation. Throws Not321Avoiding.
SkewData skew_data(const Permutation& w);

// -- Words -------------------------------------------------------------------

using Word = std::vector<int>;

/// All reduced words a with s_{a_1} ... s_{a_p} = w, sorted.
std::vector<Word> reduced_words(const Permutation& w);
/// One reduced word, found greedily from the last descent.
Word reduced_word(const Permutation& w);
/// Steps a_1..a_k with s_{a_k}...s_{a_1} w = w0, each left factor raising
/// the length. Applying d^{(y)}_{a_k} first, ..., d^{(y)}_{a_1} last carries
/// a top class down to w.
Word left_ascent_word(const Permutation& w);
/// b weakly increasing, 1 <= b_i <= a_i, and a_j < a_{j+1} forces b_j < b_{j+1}.
std::vector<Word> compatible_sequences(const Word& a);

// -- Embeddings --------------------------------------------------------------

/// (u_1..u_m, v_1+m..v_n+m).
Permutation cross_embed(const Permutation& u, const Permutation& v);
/// 1^m x v.
Permutation pad_embed(int m, const Permutation& v);

/// Grassmannian permutation in S_n with descent r and shape lambda.
/// Throws ShapeOutOfBox unless lambda fits in the r x (n - r) box.
Permutation grassmannian_permutation(const Partition& lambda, int r, int n);

Partition parse_partition(std::string_view text);
Composition parse_composition(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

}  // namespace qsk
