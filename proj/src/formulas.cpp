#include "fcaffine/formulas.hpp"

#include <algorithm>
#include <stdexcept>

#include "fcaffine/qcombinatorics.hpp"

namespace fcaffine {

namespace {

int triangle(int m) { return m * (m - 1) / 2; }

}  // namespace

AssemblyConfig AssemblyConfig::defaults(int n) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  return {n, n + 2 * (n / 2) * ((n + 1) / 2) + 3 * n};
}

Caps AssemblyConfig::middle_caps() const {
  const int m = std::max(n - 2, 0);
  return {m, std::max(1, std::min(q_cap, triangle(m))), m, m};
}

QPoly geometric_quotient(const QPoly& p, int k, int q_cap) {
  if (k < 1) throw std::invalid_argument("geometric_quotient: k must be positive");
  std::vector<BigInt> b(q_cap + 1);
  for (int i = 0; i <= q_cap; ++i) {
    b[i] = p.coeff(i);
    if (i >= k) b[i] += b[i - k];
  }
  return QPoly(std::move(b));
}

QPoly long_gf(int n, int q_cap) {
  if (n < 2) throw std::invalid_argument("long_gf: n must be at least 2");
  QPoly sum;
  for (int k = 1; k <= n - 1; ++k) {
    const QPoly b = q_binomial(n, k);
    sum += b * b;
  }
  return geometric_quotient(sum.shifted(n), n, q_cap);
}

MultiSeries finite_fc_gf(int x_cap, int q_cap) {
  if (x_cap < 0 || q_cap < 0) throw std::invalid_argument("finite_fc_gf: negative cap");
  const Caps caps{x_cap, q_cap, 0, 0};
  const MultiSeries x = MultiSeries::monomial(caps, {1, 0, 0, 0});
  const MultiSeries q = MultiSeries::monomial(caps, {0, 1, 0, 0});
  MultiSeries numerator(caps);
  MultiSeries denominator(caps);
  // Term m of either sum has x-valuation m or m + 1; stop once both exceed the cap.
  for (int m = 0; m <= x_cap; ++m) {
    const BigInt sign = m % 2 == 0 ? 1 : -1;
    const MultiSeries q_poch = q_pochhammer(q, m);
    if (m + 1 <= x_cap) {
      const MultiSeries denom = mul(q_pochhammer(x, m + 1), q_poch);
      numerator += mul_monomial(invert(denom), {m + 1, m * (m + 3) / 2, 0, 0}, sign);
    }
    const MultiSeries denom = mul(q_pochhammer(x, m), q_poch);
    denominator += mul_monomial(invert(denom), {m, m * (m + 1) / 2, 0, 0}, sign);
  }
  if (denominator.constant_term() != 1)
    throw std::logic_error("finite_fc_gf: denominator constant term must be 1");
  // The ratio counts sizes n >= 1; the empty permutation contributes the 1.
  return MultiSeries::constant(caps, 1) + mul(numerator, invert(denominator));
}

QPoly s0_at(int L, int R, int M, int q_cap) {
  QPoly out;
  for (int mu = 0; mu <= M; ++mu)
    out += (q_binomial(L - 1 + mu, mu) * q_binomial(R + M - mu, M - mu)).shifted(mu);
  return out.truncated(q_cap);
}

QPoly s1_at(int L, int R, int M, int q_cap) {
  QPoly out;
  for (int mu = 1; mu <= M - 1; ++mu)
    out += (q_binomial(M, mu) - QPoly{1}) * q_binomial(L + mu, mu) * q_binomial(R + M - mu, M - mu);
  return out.truncated(q_cap);
}

QPoly sI_at(int L, int R, int M, int q_cap) {
  QPoly out;
  for (int rho = 0; rho <= R - 1; ++rho)
    for (int lambda = 0; lambda <= L - 1; ++lambda)
      for (int mu = 0; mu <= M; ++mu) {
        const int offset = (lambda + 1) * (mu + 1) + (rho + 1) * (M - mu + 1) - 1;
        if (offset > q_cap) continue;
        QPoly term = q_binomial(M, mu) * q_binomial(L - lambda - 1 + mu, mu);
        term *= q_binomial(lambda + rho, lambda);
        term *= q_binomial(M - mu + R - rho - 1, M - mu);
        out += term.shifted(offset);
      }
  return out.truncated(q_cap);
}

namespace {

Caps widened(Caps caps) {
  caps.s = std::max(caps.s, caps.x + caps.q);
  return caps;
}

MultiSeries auxiliary_series(Caps caps) {
  std::vector<MultiSeries::Term> terms;
  for (int m = 3; m + 1 <= caps.x; ++m)
    for (int i = 1; i <= m - 1; ++i) {
      const QPoly grassmannian = q_binomial(m, i) - QPoly{1};
      const auto c = grassmannian.coeffs();
      for (int k = 1; k <= m - i - 1; ++k)
        for (std::size_t d = 0; d < c.size(); ++d)
          if (c[d] != 0) terms.emplace_back(Exponent{m + 1, static_cast<int>(d) + k, i, k}, c[d]);
    }
  return MultiSeries::from_terms(caps, std::move(terms));
}

}  // namespace

MiddleDescentParts middle_descent_parts(Caps requested) {
  const Caps caps = widened(requested);
  MultiSeries aux = auxiliary_series(caps);
  MultiSeries e(caps);
  MultiSeries f(caps);
  // prefactor_n = (-1)^n (sx)^n q^{n(n+1)/2} / ((qs;q)_n (xs;q)_{n+1}).
  MultiSeries prefactor = divide_by_one_minus(MultiSeries::constant(caps, 1), {1, 0, 0, 1});
  for (int n = 0; n + 1 <= caps.x; ++n) {
    // aux has x-valuation 4.
    if (n + 4 <= caps.x) e += mul(prefactor, substitute_s_scale(aux, n));
    f += divide_by_one_minus(mul_monomial(prefactor, {1, n + 1, 0, 1}), {0, n + 1, 0, 1});
    prefactor = mul_monomial(prefactor, {1, n + 1, 0, 1}, -1);
    prefactor = divide_by_one_minus(prefactor, {0, n + 1, 0, 1});
    prefactor = divide_by_one_minus(prefactor, {1, n + 1, 0, 1});
  }
  const MultiSeries e1 = evaluate_s_at_one(e);
  const MultiSeries f1 = evaluate_s_at_one(f);
  const MultiSeries kernel = MultiSeries::constant(caps, 1) - f1;
  if (kernel.constant_term() != 1) throw std::logic_error("1 - F(1) must have constant term 1");
  MultiSeries d = mul(e + mul(e1, f) - mul(e, f1), invert(kernel));
  return {std::move(aux), std::move(e), std::move(f), std::move(d)};
}

MultiSeries middle_descent_series(Caps caps) {
  if (caps.x < 0 || caps.q < 0 || caps.z < 0 || caps.s < 0)
    throw std::invalid_argument("middle_descent_series: negative cap");
  return restrict_caps(middle_descent_parts(caps).d, caps);
}

MultiSeries middle_descent_residual(const MiddleDescentParts& parts) {
  const MultiSeries& d = parts.d;
  const Caps caps = d.caps();
  const MultiSeries one = MultiSeries::constant(caps, 1);
  const MultiSeries one_minus_qs = one - MultiSeries::monomial(caps, {0, 1, 0, 1});
  const MultiSeries one_minus_xs = one - MultiSeries::monomial(caps, {1, 0, 0, 1});
  const MultiSeries lhs = mul(mul(d, one_minus_qs), one_minus_xs);
  const MultiSeries shifted = evaluate_s_at_one(d) - substitute_s_scale(d, 1);
  return lhs - mul(parts.auxiliary, one_minus_qs) - mul_monomial(shifted, {1, 1, 0, 1});
}

QPoly s2_at(int L, int R, int M, const MultiSeries& d, int q_cap) {
  const Caps& caps = d.caps();
  if (M < 0) throw std::invalid_argument("s2_at: negative M");
  if (caps.x < M || caps.z < M || caps.s < M || caps.q < std::min(q_cap, triangle(M)))
    throw std::invalid_argument("s2_at: series caps too small for middle block of size " +
                                std::to_string(M));
  QPoly out;
  for (int i = 1; i <= M; ++i)
    for (int j = 1; j <= M; ++j) {
      const QPoly dij = d.qpoly_at(M, i, j);
      if (dij.is_zero()) continue;
      out += mul_truncated(q_binomial(L + i, L) * q_binomial(R + j, R), dij, q_cap);
    }
  return out.truncated(q_cap);
}

QPoly SummandRecord::total(int q_cap) const {
  return mul_truncated(prefactor, intertwined + no_descent + one_descent + many_descent, q_cap);
}

SBreakdown short_breakdown(const AssemblyConfig& cfg) {
  const int n = cfg.n;
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  const MultiSeries d = middle_descent_series(cfg.middle_caps());
  std::vector<std::pair<int, int>> pairs;
  for (int L = 1; L <= n - 1; ++L)
    for (int R = 1; L + R <= n; ++R) pairs.emplace_back(L, R);

  SBreakdown out{n, std::vector<SummandRecord>(pairs.size())};
  const long count = static_cast<long>(pairs.size());
  // Exceptions must not escape the parallel region; collect the first one.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long idx = 0; idx < count; ++idx) {
    try {
      const auto [L, R] = pairs[idx];
      const int M = n - L - R;
      SummandRecord rec;
      rec.L = L;
      rec.R = R;
      rec.M = M;
      rec.prefactor = q_binomial(L + R - 2, L - 1).shifted(L + R - 1).truncated(cfg.q_cap);
      rec.intertwined = sI_at(L, R, M, cfg.q_cap);
      rec.no_descent = s0_at(L, R, M, cfg.q_cap);
      rec.one_descent = s1_at(L, R, M, cfg.q_cap);
      rec.many_descent = s2_at(L, R, M, d, cfg.q_cap);
      out.records[idx] = std::move(rec);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

QPoly assemble_f(const AssemblyConfig& cfg) {
  const int n = cfg.n;
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  if (cfg.q_cap < 0) throw std::invalid_argument("q_cap must be nonnegative");
  QPoly f = long_gf(n, cfg.q_cap);
  const MultiSeries c = finite_fc_gf(n, std::min(cfg.q_cap, triangle(n)));
  f += c.qpoly_at(n, 0, 0);
  for (const auto& rec : short_breakdown(cfg).records) f += rec.total(cfg.q_cap);
  return f.truncated(cfg.q_cap);
}

QPoly assemble_f(int n, int q_cap) { return assemble_f(AssemblyConfig{n, q_cap}); }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigInt stable_prime_value(int p) {
  if (!is_prime(p)) throw std::invalid_argument("stable_prime_value: " + std::to_string(p) + " is not prime");
  return (binomial(2 * p, p) - 2) / p;
}

}  // namespace fcaffine
