#pragma once

#include "fcaffine/qpoly.hpp"

namespace fcaffine {

/// (q; q)_n = (1 - q)(1 - q^2) ... (1 - q^n).
QPoly q_factorial_product(int n);

/// Gaussian polynomial [n choose k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k}),
/// evaluated by exact division. Zero when k < 0 or k > n.
/// Results are memoised; safe to call concurrently.
QPoly q_binomial(int n, int k);

/// Ordinary binomial coefficient C(n, k) as an exact integer.
BigInt binomial(int n, int k);

}  // namespace fcaffine
