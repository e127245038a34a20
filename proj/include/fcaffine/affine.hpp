#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fcaffine {

enum class Side { left, right };

/// A permutation of {1, ..., n} in one-line notation.
class FinitePermutation {
 public:
  /// Throws std::invalid_argument unless `one_line` is a bijection of [n].
  explicit FinitePermutation(std::vector<int> one_line);
  static FinitePermutation identity(int n);

  int size() const { return static_cast<int>(one_line_.size()); }
  /// u(i) for 1 <= i <= n.
  int operator()(int i) const { return one_line_[i - 1]; }
  std::span<const int> one_line() const { return one_line_; }

  int inversions() const;
  /// Whether some i < j < k has u(i) > u(j) > u(k).
  bool contains_321() const;
  FinitePermutation inverse() const;

  friend auto operator<=>(const FinitePermutation&, const FinitePermutation&) = default;
  std::string to_string() const;

 private:
  std::vector<int> one_line_;
};

/// An element of the affine symmetric group: a bijection w of the integers
/// with w(i + n) = w(i) + n, stored as its base window [w(1), ..., w(n)].
class AffinePermutation {
 public:
  /// Throws std::invalid_argument if n < 2, residues repeat mod n, or the
  /// entries do not sum to n(n+1)/2.
  explicit AffinePermutation(std::vector<int> window);
  static AffinePermutation identity(int n);
  static AffinePermutation from_finite(const FinitePermutation& u);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const int> window() const { return window_; }
  /// w(i) for any integer i.
  long operator()(long i) const;

  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;
  /// "[-1,-4,14,1]".
  std::string to_string() const;

 private:
  std::vector<int> window_;
};

/// Floor division for possibly negative numerators.
constexpr long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
constexpr long mod_floor(long a, long b) { return a - b * floor_div(a, b); }

long value_at(const AffinePermutation& w, long i);

/// Coxeter length: #{(i, j) : 1 <= i <= n, i < j, w(i) > w(j)}.
long coxeter_length(const AffinePermutation& w);

/// w * s_i (swap positions i, i+1 mod n) or s_i * w (swap values i, i+1 mod n);
/// i is a residue in [0, n).
AffinePermutation apply_generator(const AffinePermutation& w, int i, Side side);

/// (a * b)(i) = a(b(i)).
AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b);
AffinePermutation inverse(const AffinePermutation& w);

/// Full commutativity via the 321-criterion in complete notation. A 321
/// instance can be translated so its middle index j lies in [1, n]; the
/// largest value left of j is then attained in [j - n, j - 1] and the
/// smallest value right of j in [j + 1, j + n], because each residue class
/// of positions carries increasing values. So the test is exact and O(n^2).
bool is_fully_commutative(const AffinePermutation& w);

/// The search radius K = 1 + max_i ceil(|w(i) - i| / n).
long search_radius(const AffinePermutation& w);
/// Literal triple-loop search for a 321 instance with all indices in [lo, hi].
bool has_321_in_range(const AffinePermutation& w, long lo, long hi);

struct ParabolicDecomposition {
  AffinePermutation coset_rep;  // sorted window
  FinitePermutation finite;     // w = coset_rep * finite
};

ParabolicDecomposition parabolic_decompose(const AffinePermutation& w);
/// (w0 * u)(i) = w0(u(i)) for 1 <= i <= n.
AffinePermutation compose(const AffinePermutation& w0, const FinitePermutation& u);

/// Residues i in [0, n) with w(i) > w(i+1) (right) or the same for w^{-1} (left).
std::vector<int> descent_set(const AffinePermutation& w, Side side);

/// Parses "[-1,-4,14,1]", "-1,-4,14,1" or "-1 -4 14 1".
std::vector<int> parse_window(std::string_view text);

}  // namespace fcaffine
