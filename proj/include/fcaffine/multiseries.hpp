#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcaffine/qpoly.hpp"

namespace fcaffine {

enum class Var { x, q, z, s };

/// Exponent tuple of a monomial x^x q^q z^z s^s.
struct Exponent {
  int x = 0;
  int q = 0;
  int z = 0;
  int s = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend Exponent operator+(Exponent a, const Exponent& b) {
    return {a.x + b.x, a.q + b.q, a.z + b.z, a.s + b.s};
  }
  int get(Var v) const;
};

/// Per-variable degree caps. A series is exact for every exponent that is
/// componentwise within its caps; everything above is discarded.
struct Caps {
  int x = 0;
  int q = 0;
  int z = 0;
  int s = 0;

  friend bool operator==(const Caps&, const Caps&) = default;
  bool admits(const Exponent& e) const {
    return e.x >= 0 && e.q >= 0 && e.z >= 0 && e.s >= 0 && e.x <= x && e.q <= q && e.z <= z &&
           e.s <= s;
  }
  int get(Var v) const;
};

/// Truncated power series in commuting x, q, z, s over the integers.
///
/// Stored sparsely as a vector of (exponent, coefficient) pairs sorted by
/// exponent (lexicographic in x, q, z, s), with no zero coefficients and no
/// exponent above the caps.
class MultiSeries {
 public:
  using Term = std::pair<Exponent, BigInt>;

  explicit MultiSeries(Caps caps) : caps_(caps) {}

  static MultiSeries constant(Caps caps, const BigInt& c);
  static MultiSeries monomial(Caps caps, Exponent e, const BigInt& c = 1);
  /// Builds a series from terms in any order; duplicates are summed, zeros
  /// and above-cap terms dropped.
  static MultiSeries from_terms(Caps caps, std::vector<Term> terms);
  /// Embeds a polynomial in q (truncated at the q cap).
  static MultiSeries from_qpoly(Caps caps, const QPoly& p);

  const Caps& caps() const { return caps_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(const Exponent& e) const;
  BigInt constant_term() const { return coeff({}); }

  /// The q-polynomial of a series whose terms only involve q.
  /// Throws std::invalid_argument if x, z or s appears.
  QPoly to_qpoly() const;
  /// Coefficient of x^x z^z s^s as a polynomial in q.
  QPoly qpoly_at(int x, int z, int s) const;

  MultiSeries& operator+=(const MultiSeries& rhs);
  MultiSeries& operator-=(const MultiSeries& rhs);
  MultiSeries& operator*=(const BigInt& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator-(MultiSeries a) { return a *= BigInt(-1); }
  friend MultiSeries operator*(MultiSeries a, const BigInt& c) { return a *= c; }
  friend bool operator==(const MultiSeries&, const MultiSeries&) = default;

  std::string to_string() const;

 private:
  friend class DenseBox;
  Caps caps_;
  std::vector<Term> terms_;
};

/// Exact truncated product. OpenMP-parallel over output x-degree slices; each
/// slice is owned by one thread, so the result is deterministic.
/// Throws std::invalid_argument on a cap mismatch.
MultiSeries mul(const MultiSeries& a, const MultiSeries& b);
/// Serial schoolbook convolution into an ordered map. Kept as the reference
/// that `mul` is tested and benchmarked against.
MultiSeries mul_reference(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

/// Multiplicative inverse within caps. The constant term must be +1 or -1;
/// anything else throws std::domain_error.
MultiSeries invert(const MultiSeries& a);

/// a / (1 - c * m) for a monomial exponent m != 0, computed exactly within
/// caps by the recurrence b_e = a_e + c * b_{e - m}.
MultiSeries divide_by_one_minus(const MultiSeries& a, const Exponent& m, const BigInt& c = 1);

/// Multiplies by the monomial c * m (terms leaving the caps are dropped).
MultiSeries mul_monomial(const MultiSeries& a, const Exponent& m, const BigInt& c = 1);

/// (a; q)_n = (1 - a)(1 - a q) ... (1 - a q^{n-1}).
MultiSeries q_pochhammer(const MultiSeries& a, int n);

/// Substitutes s -> s q^power.
MultiSeries substitute_s_scale(const MultiSeries& a, int power);

/// Substitutes s -> 1. Exact only when every term's s-degree is bounded
/// within the caps, i.e. when no mass was lost to s-truncation.
MultiSeries evaluate_s_at_one(const MultiSeries& a);

/// Coefficient of var^degree, as a series in the remaining variables.
/// Caps are kept unchanged.
MultiSeries extract(const MultiSeries& a, Var var, int degree);

/// Drops every term above the new caps; the new caps must not exceed the old.
MultiSeries restrict_caps(const MultiSeries& a, Caps caps);

}  // namespace fcaffine
