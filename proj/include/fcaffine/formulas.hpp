#pragma once

#include <vector>

#include "fcaffine/multiseries.hpp"
#include "fcaffine/qpoly.hpp"

namespace fcaffine {

/// Rank and output precision of one f_n(q) evaluation.
struct AssemblyConfig {
  int n = 3;
  int q_cap = 1;

  /// q_cap = n + 2 floor(n/2) ceil(n/2) + 3n: past the longest short element
  /// plus three full periods of the long series.
  static AssemblyConfig defaults(int n);
  /// Caps of the S_2 kernel series: x, z, s up to the largest middle block
  /// n - 2, q up to min(q_cap, C(n - 2, 2)) (no permutation of n - 2 letters
  /// has more inversions).
  Caps middle_caps() const;
};

/// Long elements: q^n / (1 - q^n) * sum_{k=1}^{n-1} [n choose k]_q^2, to q^q_cap.
QPoly long_gf(int n, int q_cap);

/// Length generating function of the finite 321-avoiding permutations,
/// sum_n sum_w x^n q^{inv w}, as the ratio of the two q-Bessel type sums
/// (plus the empty permutation).
MultiSeries finite_fc_gf(int x_cap, int q_cap);

/// [x^{L+M+R}] of the four short-element summands for fixed (L, R).
QPoly s0_at(int L, int R, int M, int q_cap);
QPoly s1_at(int L, int R, int M, int q_cap);
QPoly sI_at(int L, int R, int M, int q_cap);

/// Pieces of the middle-descent kernel. `auxiliary` counts the permutations
/// with two descents built from one-descent ones by inserting the maximum;
/// `e` and `f` are the iterated-kernel sums, and `d` their combination
/// (E(s) + E(1) F(s) - E(s) F(1)) / (1 - F(1)).
struct MiddleDescentParts {
  MultiSeries auxiliary;
  MultiSeries e;
  MultiSeries f;
  MultiSeries d;
};

/// All parts, computed with s-cap widened to x_cap + q_cap so that setting
/// s = 1 loses nothing (every term has s-degree <= x-degree + q-degree).
MiddleDescentParts middle_descent_parts(Caps caps);

/// D(x, q, z, s): 321-avoiding permutations with at least two descents by
/// size, inversions, entries left of the leftmost descent, entries right of
/// the rightmost descent. Returned with exactly the requested caps.
MultiSeries middle_descent_series(Caps caps);

/// D (1 - qs)(1 - xs) - N (1 - qs) - xqs (D(1) - D(qs)), which vanishes when D
/// solves the generating-tree functional equation. Evaluated at the caps of
/// `parts.d` (which must have the widened s-cap).
MultiSeries middle_descent_residual(const MiddleDescentParts& parts);

/// sum_{i,j>=1} [L+i choose L] [R+j choose R] [x^M z^i s^j] D.
/// Throws std::invalid_argument if D's caps cannot hold size-M statistics.
QPoly s2_at(int L, int R, int M, const MultiSeries& d, int q_cap);

struct SummandRecord {
  int L = 0;
  int R = 0;
  int M = 0;
  QPoly prefactor;     // q^{L+R-1} [L+R-2 choose L-1]
  QPoly intertwined;   // S_I
  QPoly no_descent;    // S_0
  QPoly one_descent;   // S_1
  QPoly many_descent;  // S_2

  QPoly total(int q_cap) const;
};

/// Per-(L, R) records for rank n with L, R >= 1, M = n - L - R >= 0.
struct SBreakdown {
  int n = 0;
  std::vector<SummandRecord> records;
};

/// Computes the per-(L, R) summands; the (L, R) pairs are evaluated in
/// parallel and stored in a fixed order.
SBreakdown short_breakdown(const AssemblyConfig& cfg);

/// f_n(q) up to q^q_cap.
QPoly assemble_f(int n, int q_cap);
QPoly assemble_f(const AssemblyConfig& cfg);

/// (C(2p, p) - 2) / p. Throws std::invalid_argument unless p is prime.
BigInt stable_prime_value(int p);

bool is_prime(int p);

/// p / (1 - q^k) expanded as a power series to q^cap.
QPoly geometric_quotient(const QPoly& p, int k, int q_cap);

}  // namespace fcaffine
