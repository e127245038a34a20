#pragma once

#include <span>
#include <string>
#include <vector>

#include "fcaffine/affine.hpp"

namespace fcaffine {

/// Abacus with n runners. Runner r holds positions k n + r; every position
/// at or above a runner's lowest bead is a bead, everything below is a gap.
/// Only the lowest bead of each runner is stored.
class Abacus {
 public:
  /// Lowest-bead positions in any order; residues must be distinct mod n.
  Abacus(int n, std::vector<long> lowest_beads);

  int runners() const { return n_; }
  /// Lowest bead of runner r, 1 <= r <= n.
  long lowest_bead(int r) const { return by_runner_[r - 1]; }
  /// Lowest-bead positions sorted increasingly.
  std::vector<long> positions() const;
  long last_bead() const;
  bool is_bead(long position) const;

  /// Balanced: lowest beads sum to n(n+1)/2.
  bool is_balanced() const;
  /// Normalized: position n+1 is the first gap (equivalently, the smallest
  /// lowest bead sits at position 1).
  bool is_normalized() const;

  /// One line per level, runners left to right, 'O' for beads, '.' for gaps,
  /// covering [min - n, max + n]. With labels each cell shows its position,
  /// beads in parentheses.
  std::string render(bool labels = false) const;

  friend bool operator==(const Abacus&, const Abacus&) = default;

 private:
  int n_;
  std::vector<long> by_runner_;
};

/// Balanced abacus of a minimal length coset representative (sorted window).
/// Throws std::invalid_argument for an unsorted window.
Abacus abacus_from_coset_rep(const AffinePermutation& w0);

/// Shifts every bead so that position n+1 becomes the first gap.
Abacus normalize(const Abacus& a);
/// Inverse of normalize: the balanced abacus and its sorted window.
AffinePermutation balanced_coset_rep(const Abacus& a);

/// Sum over runners of the number of gaps preceding the lowest bead in
/// reading order.
long abacus_length(const Abacus& a);

enum class ElementClass { short_element, long_element };

/// Long iff the last bead lies beyond 2n. Requires a normalized abacus.
ElementClass classify(const Abacus& a);

/// Lowest beads lie in {1..n} union {i-n+1..i}, i the last bead.
/// Requires a normalized abacus.
bool is_fc_coset_rep(const Abacus& a);

struct LMRProfile {
  int left = 0;
  int middle = 0;
  int right = 0;
  friend auto operator<=>(const LMRProfile&, const LMRProfile&) = default;
  std::string to_string() const;  // "(3)(1)(2)"
};

/// Requires a normalized, short, FC abacus.
LMRProfile lmr_profile(const Abacus& a);

/// Every normalized short FC abacus with n runners: runner 1 keeps its bead at
/// 1 and each runner r >= 2 has its lowest bead at r or n + r.
std::vector<Abacus> short_fc_abaci(int n);

/// The (L)(M)(R) abaci with R > 0: beads through n and at 2n - M, the R - 1
/// remaining beads placed among n+2 .. 2n-M-1 in lexicographic order.
std::vector<Abacus> lmr_abaci(LMRProfile profile);

}  // namespace fcaffine
