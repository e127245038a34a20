#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fcaffine {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in q with exact integer coefficients.
///
/// Index i of the coefficient vector holds the coefficient of q^i. The vector
/// is always trimmed: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long long> coeffs);

  static QPoly constant(const BigInt& c);
  static QPoly monomial(const BigInt& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^i; zero past the degree.
  BigInt coeff(std::size_t i) const;
  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Value at q = 1.
  BigInt at_one() const;
  bool all_nonnegative() const;

  /// Multiplies by q^k.
  QPoly shifted(std::size_t k) const;
  /// Drops every term above q^cap.
  QPoly truncated(std::size_t cap) const;
  /// Exact quotient by (1 - q^k); throws std::domain_error if (1 - q^k) does
  /// not divide this polynomial.
  QPoly divided_by_one_minus_q_power(std::size_t k) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const BigInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& c) { return a *= c; }
  friend QPoly operator-(QPoly a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// "1 + 3q + 6q^2" style rendering; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Product truncated above q^cap without forming the full product.
QPoly mul_truncated(const QPoly& a, const QPoly& b, std::size_t cap);

}  // namespace fcaffine
