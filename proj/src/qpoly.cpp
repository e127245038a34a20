#include "fcaffine/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fcaffine {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt QPoly::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

bool QPoly::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::truncated(std::size_t cap) const {
  if (coeffs_.size() <= cap + 1) return *this;
  return QPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(cap + 1)));
}

QPoly QPoly::divided_by_one_minus_q_power(std::size_t k) const {
  if (k == 0) throw std::domain_error("division by 1 - q^0 = 0");
  if (is_zero()) return {};
  // a = (1 - q^k) b  <=>  b_i = a_i + b_{i-k}; the quotient has degree deg(a) - k.
  const std::size_t n = coeffs_.size();
  if (n <= k) throw std::domain_error("1 - q^k does not divide polynomial");
  std::vector<BigInt> b(n - k);
  for (std::size_t i = 0; i < b.size(); ++i) {
    b[i] = coeffs_[i];
    if (i >= k) b[i] += b[i - k];
  }
  // Remainder check on the top k coefficients.
  for (std::size_t i = n - k; i < n; ++i) {
    BigInt expect = (i >= k && i - k < b.size()) ? -b[i - k] : BigInt(0);
    if (coeffs_[i] != expect) throw std::domain_error("1 - q^k does not divide polynomial");
  }
  return QPoly(std::move(b));
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return mul_truncated(a, b, a.coeffs_.size() + b.coeffs_.size());
}

QPoly operator-(QPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

QPoly mul_truncated(const QPoly& a, const QPoly& b, std::size_t cap) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  const std::size_t len = std::min(ac.size() + bc.size() - 1, cap + 1);
  std::vector<BigInt> out(len);
  for (std::size_t i = 0; i < ac.size() && i < len; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size() && i + j < len; ++j) out[i + j] += ac[i] * bc[j];
  }
  return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace fcaffine
