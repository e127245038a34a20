#include "fcaffine/affine.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fcaffine {

namespace {

std::string bracketed(std::span<const int> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace

FinitePermutation::FinitePermutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation: " + to_string());
    seen[v] = 1;
  }
}

FinitePermutation FinitePermutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return FinitePermutation(std::move(v));
}

int FinitePermutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i)
    for (std::size_t j = i + 1; j < one_line_.size(); ++j) count += one_line_[i] > one_line_[j];
  return count;
}

bool FinitePermutation::contains_321() const {
  const int n = size();
  for (int j = 1; j + 1 < n; ++j) {
    const int mid = one_line_[j];
    const bool bigger_left = std::any_of(one_line_.begin(), one_line_.begin() + j,
                                         [mid](int v) { return v > mid; });
    const bool smaller_right = std::any_of(one_line_.begin() + j + 1, one_line_.end(),
                                           [mid](int v) { return v < mid; });
    if (bigger_left && smaller_right) return true;
  }
  return false;
}

FinitePermutation FinitePermutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int i = 0; i < size(); ++i) inv[one_line_[i] - 1] = i + 1;
  return FinitePermutation(std::move(inv));
}

std::string FinitePermutation::to_string() const { return bracketed(one_line_); }

AffinePermutation::AffinePermutation(std::vector<int> window) : window_(std::move(window)) {
  const long n = rank();
  if (n < 2) throw std::invalid_argument("affine permutation needs rank n >= 2");
  std::vector<char> seen(n, 0);
  long sum = 0;
  for (int v : window_) {
    const long r = mod_floor(v, n);
    if (seen[r]) throw std::invalid_argument("window residues repeat mod n: " + to_string());
    seen[r] = 1;
    sum += v;
  }
  if (sum != n * (n + 1) / 2)
    throw std::invalid_argument("window " + to_string() + " does not sum to n(n+1)/2");
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return AffinePermutation(std::move(v));
}

AffinePermutation AffinePermutation::from_finite(const FinitePermutation& u) {
  return AffinePermutation(std::vector<int>(u.one_line().begin(), u.one_line().end()));
}

long AffinePermutation::operator()(long i) const {
  const long n = rank();
  const long k = floor_div(i - 1, n);
  return window_[i - 1 - k * n] + k * n;
}

std::string AffinePermutation::to_string() const { return bracketed(window_); }

long value_at(const AffinePermutation& w, long i) { return w(i); }

long coxeter_length(const AffinePermutation& w) {
  const long n = w.rank();
  long length = 0;
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      // Count t with j + t n > i and w(j) + t n < w(i).
      const long t0 = j > i ? 0 : 1;
      const long d = w(i) - w(j);
      const long t_end = -floor_div(-d, n);  // ceil(d / n); t < t_end
      length += std::max(0L, t_end - t0);
    }
  }
  return length;
}

AffinePermutation apply_generator(const AffinePermutation& w, int i, Side side) {
  const int n = w.rank();
  if (i < 0 || i >= n) throw std::invalid_argument("generator index out of range");
  std::vector<int> v(w.window().begin(), w.window().end());
  if (side == Side::right) {
    if (i == 0) {
      // Swap w(0) = w(n) - n with w(1).
      const int w0 = v[n - 1] - n;
      const int w1 = v[0];
      v[0] = w0;
      v[n - 1] = w1 + n;
    } else {
      std::swap(v[i - 1], v[i]);
    }
  } else {
    for (int& x : v) {
      const long r = mod_floor(x, n);
      if (r == i) ++x;
      else if (r == (i + 1) % n) --x;
    }
  }
  return AffinePermutation(std::move(v));
}

AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> v(a.rank());
  for (int i = 1; i <= a.rank(); ++i) v[i - 1] = static_cast<int>(a(b(i)));
  return AffinePermutation(std::move(v));
}

AffinePermutation inverse(const AffinePermutation& w) {
  const long n = w.rank();
  std::vector<int> v(n);
  for (long i = 1; i <= n; ++i) {
    const long value = w(i);
    const long k = floor_div(value - 1, n);
    v[value - 1 - k * n] = static_cast<int>(i - k * n);
  }
  return AffinePermutation(std::move(v));
}

bool is_fully_commutative(const AffinePermutation& w) {
  const long n = w.rank();
  for (long j = 1; j <= n; ++j) {
    const long mid = w(j);
    long left_max = w(j - n);
    long right_min = w(j + 1);
    for (long d = 1; d <= n; ++d) {
      left_max = std::max(left_max, w(j - d));
      right_min = std::min(right_min, w(j + d));
    }
    if (left_max > mid && mid > right_min) return false;
  }
  return true;
}

long search_radius(const AffinePermutation& w) {
  const long n = w.rank();
  long k = 0;
  for (long i = 1; i <= n; ++i) {
    const long d = std::abs(w(i) - i);
    k = std::max(k, (d + n - 1) / n);
  }
  return 1 + k;
}

bool has_321_in_range(const AffinePermutation& w, long lo, long hi) {
  for (long i = lo; i <= hi; ++i)
    for (long j = i + 1; j <= hi; ++j) {
      if (w(i) <= w(j)) continue;
      for (long k = j + 1; k <= hi; ++k)
        if (w(j) > w(k)) return true;
    }
  return false;
}

ParabolicDecomposition parabolic_decompose(const AffinePermutation& w) {
  const int n = w.rank();
  std::vector<int> sorted(w.window().begin(), w.window().end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> u(n);
  for (int p = 0; p < n; ++p)
    u[p] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w.window()[p]) -
                            sorted.begin()) + 1;
  return {AffinePermutation(std::move(sorted)), FinitePermutation(std::move(u))};
}

AffinePermutation compose(const AffinePermutation& w0, const FinitePermutation& u) {
  if (w0.rank() != u.size()) throw std::invalid_argument("rank mismatch");
  std::vector<int> v(u.size());
  for (int i = 1; i <= u.size(); ++i) v[i - 1] = w0.window()[u(i) - 1];
  return AffinePermutation(std::move(v));
}

std::vector<int> descent_set(const AffinePermutation& w, Side side) {
  if (side == Side::left) return descent_set(inverse(w), Side::right);
  std::vector<int> out;
  for (int i = 0; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> parse_window(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '[' || c == ']' || c == '\t'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    int value = 0;
    const auto token = text.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("bad window entry '" + std::string(token) + "'");
    out.push_back(value);
    pos = end;
  }
  if (out.empty()) throw std::invalid_argument("empty window");
  return out;
}

}  // namespace fcaffine
