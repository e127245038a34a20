#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcaffine/abacus.hpp"
#include "fcaffine/affine.hpp"
#include "fcaffine/multiseries.hpp"
#include "fcaffine/qpoly.hpp"

// Brute-force ground truth. Nothing here calls into the generating-function
// stack; everything is enumeration over group elements or permutations.
namespace fcaffine::oracle {

struct LengthCount {
  BigInt total;
  BigInt fc;
  friend bool operator==(const LengthCount&, const LengthCount&) = default;
};

/// counts[l] = (number of elements of length l, number of those that are FC).
struct LengthHistogram {
  int n = 0;
  std::vector<LengthCount> counts;

  std::vector<BigInt> fc_counts() const;
  friend bool operator==(const LengthHistogram&, const LengthHistogram&) = default;
};

/// Level-by-level enumeration of the affine symmetric group from the identity
/// by right generators, up to length max_len. Each level is expanded in
/// parallel; a child w s_i is kept only by the parent whose generator i is the
/// child's smallest right descent, so no deduplication set is needed.
LengthHistogram bfs_enumerate(int n, int max_len);

/// The same histogram by plain breadth-first search with a hash set of
/// windows per level. Serial reference for `bfs_enumerate`.
LengthHistogram bfs_enumerate_serial(int n, int max_len);

/// Every element of length <= max_len, grouped by BFS depth.
std::vector<std::vector<AffinePermutation>> elements_by_depth(int n, int max_len);

/// {"n": n, "lengths": [{"l": l, "total": "...", "fc": "..."}]}.
std::string histogram_json(const LengthHistogram& h);

/// Reduced word obtained by repeatedly stripping the smallest right descent;
/// w = s_{word[0]} s_{word[1]} ... .
std::vector<int> reduced_word(const AffinePermutation& w);
AffinePermutation from_word(int n, std::span<const int> word);

/// s_a and s_b commute in the affine Coxeter graph of rank n.
bool generators_commute(int n, int a, int b);

class ClosureLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full commutativity straight from the definition: close one reduced word
/// under commutation moves and look for a short braid s_i s_{i+-1} s_i.
/// Throws ClosureLimitExceeded if the class grows past `closure_limit` words.
bool fc_by_definition(const AffinePermutation& w, std::size_t closure_limit = 1'000'000);

/// Statistics of a finite permutation. left_run: entries up to and including
/// the top of the leftmost descent; right_run: entries after the top of the
/// rightmost descent. Both equal the size when there is no descent.
struct DescentStats {
  int size = 0;
  int inversions = 0;
  int left_run = 0;
  int right_run = 0;
  int descents = 0;
  friend auto operator<=>(const DescentStats&, const DescentStats&) = default;
};

using DescentStatTable = std::map<DescentStats, BigInt>;

DescentStats descent_stats(std::span<const int> one_line);

/// Tabulates every 321-avoiding permutation of size 0..max_size (<= 10).
DescentStatTable finite_321_stats(int max_size);

/// The rows with at least two descents as sum x^size q^inv z^left s^right.
MultiSeries multi_descent_series(const DescentStatTable& table, Caps caps);

/// Inversion polynomial of all 321-avoiding permutations of one size.
QPoly finite_fc_polynomial(const DescentStatTable& table, int size);

struct PeriodicityReport {
  int n = 0;
  long proven_onset = 0;      // n + 2 floor(n/2) ceil(n/2)
  long conjectured_onset = 0; // 1 + floor((n-1)/2) ceil((n-1)/2); reported only
  int period = 0;
  long onset = 0;             // first index from which the tail is periodic
  std::vector<BigInt> cycle;  // a[onset .. onset + period - 1]
  bool period_divides_n = false;
  std::optional<BigInt> prime_tail;  // expected constant tail for prime n
  bool prime_tail_ok = true;

  bool passed() const { return period_divides_n && prime_tail_ok; }
};

/// Needs coefficients through proven_onset + 2n; throws std::invalid_argument
/// otherwise.
PeriodicityReport periodicity_report(int n, std::span<const BigInt> coeffs);
PeriodicityReport periodicity_report(const LengthHistogram& h);

/// A short FC element together with its parabolic data.
struct ShortElement {
  AffinePermutation element;
  AffinePermutation coset_rep;
  FinitePermutation finite;
  LMRProfile profile;
  long length = 0;
};

/// All short FC elements of rank n: every normalized short FC abacus crossed
/// with every u in S_n, kept when the product is FC.
std::vector<ShortElement> short_fc_elements(int n);

/// Longest short FC element, by exhaustive enumeration.
long max_short_length(int n);

enum class ShortCase {
  finite_block,  // (n)(0)(0): no right entries
  intertwined,
  no_middle_descent,
  one_middle_descent,
  many_middle_descents,
};

/// Case of a short element read off the statuses of its window entries.
ShortCase short_case(const ShortElement& e);

/// Gaussian polynomial three ways by enumeration.
QPoly qbinom_by_multiset_inversions(int n, int k);
QPoly qbinom_by_partitions_in_box(int n, int k);
QPoly qbinom_by_subsets(int n, int k);

}  // namespace fcaffine::oracle
