#include "fcaffine/qcombinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace fcaffine {

QPoly q_factorial_product(int n) {
  QPoly out{1};
  for (int i = 1; i <= n; ++i) out *= QPoly{1} - QPoly::monomial(1, i);
  return out;
}

namespace {

QPoly q_binomial_uncached(int n, int k) {
  // Numerator (1 - q^n) ... (1 - q^{n-k+1}), then divide out (1 - q^i) for i = 1..k.
  QPoly p{1};
  for (int i = n - k + 1; i <= n; ++i) p *= QPoly{1} - QPoly::monomial(1, i);
  for (int i = 1; i <= k; ++i) p = p.divided_by_one_minus_q_power(i);
  return p;
}

}  // namespace

QPoly q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: n must be nonnegative");
  if (k < 0 || k > n) return {};
  static std::mutex mu;
  static std::map<std::pair<int, int>, QPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }
  QPoly p = q_binomial_uncached(n, k);
  std::lock_guard lock(mu);
  return cache.emplace(std::pair{n, k}, std::move(p)).first->second;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fcaffine
