#include "fcaffine/checks.hpp"

#include <algorithm>
#include <random>

#include "fcaffine/abacus.hpp"
#include "fcaffine/formulas.hpp"
#include "fcaffine/oracle.hpp"
#include "fcaffine/qcombinatorics.hpp"

namespace fcaffine {

namespace {

CheckResult make(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, std::move(detail)};
}

CheckResult bfs_parallel_matches_serial() {
  for (int n = 2; n <= 5; ++n) {
    if (oracle::bfs_enumerate(n, 12) != oracle::bfs_enumerate_serial(n, 12))
      return make("bfs parallel = serial", false, "n=" + std::to_string(n));
  }
  return make("bfs parallel = serial", true, "n=2..5, length <= 12");
}

CheckResult bfs_depth_is_length() {
  for (int n = 3; n <= 4; ++n) {
    const auto levels = oracle::elements_by_depth(n, 8);
    for (std::size_t d = 0; d < levels.size(); ++d)
      for (const auto& w : levels[d])
        if (coxeter_length(w) != static_cast<long>(d))
          return make("bfs depth = length", false, w.to_string());
  }
  return make("bfs depth = length", true, "n=3,4, depth <= 8");
}

CheckResult fc_definition_agrees() {
  long count = 0;
  for (int n = 3; n <= 5; ++n)
    for (const auto& level : oracle::elements_by_depth(n, 8))
      for (const auto& w : level) {
        if (oracle::fc_by_definition(w) != is_fully_commutative(w))
          return make("fc test = definition", false, w.to_string());
        ++count;
      }
  return make("fc test = definition", true, std::to_string(count) + " elements, n=3..5, length <= 8");
}

CheckResult periodicity(int n) {
  const AssemblyConfig cfg = AssemblyConfig::defaults(n);
  const QPoly f = assemble_f(cfg);
  std::vector<BigInt> a;
  for (int i = 0; i <= cfg.q_cap; ++i) a.push_back(f.coeff(i));
  const auto r = oracle::periodicity_report(n, a);
  std::string detail = "period " + std::to_string(r.period) + " from q^" + std::to_string(r.onset);
  if (r.prime_tail) detail += ", tail " + r.cycle.front().str();
  return make("periodicity n=" + std::to_string(n), r.passed(), detail);
}

CheckResult qbinomial_interpretations() {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      const QPoly b = q_binomial(n, k);
      if (b != oracle::qbinom_by_multiset_inversions(n, k) || b != oracle::qbinom_by_partitions_in_box(n, k) ||
          b != oracle::qbinom_by_subsets(n, k))
        return make("q-binomial interpretations", false, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  return make("q-binomial interpretations", true, "0 <= k <= n <= 8");
}

CheckResult qbinomial_identities() {
  const QPoly one = QPoly::constant(1);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      bool ok = q_binomial(n, k) == q_binomial(n, n - k);
      if (k < n)
        ok = ok && (one - QPoly::monomial(1, n - k)) * q_binomial(n, k) ==
                       (one - QPoly::monomial(1, n)) * q_binomial(n - 1, k);
      if (!ok)
        return make("q-binomial identities", false, "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  return make("q-binomial identities", true, "n <= 12");
}

CheckResult middle_descent_table() {
  const Caps caps{8, 28, 8, 8};
  const auto parts = middle_descent_parts(caps);
  const bool residual = middle_descent_residual(parts).is_zero();
  const bool table = restrict_caps(parts.d, caps) ==
                     oracle::multi_descent_series(oracle::finite_321_stats(8), caps);
  return make("middle-descent series", residual && table,
              std::string("sizes <= 8, table ") + (table ? "equal" : "differs") + ", residual " +
                  (residual ? "zero" : "nonzero"));
}

CheckResult abacus_length_law() {
  std::mt19937 rng(20240601);
  for (int n = 2; n <= 8; ++n)
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> window(n);
      for (int r = 1; r <= n; ++r) window[r - 1] = r + n * std::uniform_int_distribution<int>(-4, 4)(rng);
      std::sort(window.begin(), window.end());
      const Abacus a(n, std::vector<long>(window.begin(), window.end()));
      const AffinePermutation w0 = balanced_coset_rep(normalize(a));
      if (abacus_length(abacus_from_coset_rep(w0)) != coxeter_length(w0))
        return make("abacus length = length", false, w0.to_string());
    }
  return make("abacus length = length", true, "100 random windows per n=2..8");
}

CheckResult fixed_profile_sums() {
  for (int n = 3; n <= 7; ++n)
    for (int L = 1; L < n; ++L)
      for (int R = 1; L + R <= n; ++R) {
        const LMRProfile p{L, n - L - R, R};
        QPoly sum;
        for (const Abacus& a : lmr_abaci(p)) sum += QPoly::monomial(1, abacus_length(a));
        if (sum != q_binomial(L + R - 2, L - 1).shifted(L + R - 1))
          return make("(L)(M)(R) length sums", false, p.to_string());
      }
  return make("(L)(M)(R) length sums", true, "n=3..7");
}

CheckResult longest_short_element() {
  for (int n = 2; n <= 6; ++n) {
    const long expected = 2L * (n / 2) * ((n + 1) / 2);
    if (oracle::max_short_length(n) != expected)
      return make("longest short element", false, "n=" + std::to_string(n));
  }
  return make("longest short element", true, "n=2..6");
}

}  // namespace

std::vector<CheckResult> golden_checks(std::span<const GoldenSeries> tables, bool check_checksum) {
  std::vector<CheckResult> out;
  if (check_checksum) {
    const bool ok = golden_checksum(tables) == kGoldenChecksum;
    out.push_back(make("golden checksum", ok, ok ? "embedded tables intact" : "embedded tables altered"));
  }
  for (const auto& t : tables) {
    const int cap = std::max(t.max_degree, AssemblyConfig::defaults(t.n).q_cap);
    const QPoly f = assemble_f(t.n, cap);
    const std::string name = "golden n=" + std::to_string(t.n);
    if (const auto m = first_mismatch(t, f))
      out.push_back(make(name, false, m->to_string()));
    else
      out.push_back(make(name, true, std::to_string(t.coeffs.size()) + " coefficients"));
  }
  return out;
}

int default_oracle_length(int n) { return 2 * n + 2 * (n / 2) * ((n + 1) / 2); }

CheckResult oracle_check(int n, int max_len) {
  const std::string name = "oracle n=" + std::to_string(n);
  const auto h = oracle::bfs_enumerate(n, max_len);
  const QPoly f = assemble_f(n, max_len);
  for (int l = 0; l <= max_len; ++l)
    if (h.counts[l].fc != f.coeff(l))
      return make(name, false,
                  "n=" + std::to_string(n) + " degree=" + std::to_string(l) + " expected=" + h.counts[l].fc.str() +
                      " got=" + f.coeff(l).str());
  return make(name, true, "lengths 0.." + std::to_string(max_len));
}

std::vector<CheckResult> property_checks() {
  std::vector<CheckResult> out;
  out.push_back(bfs_parallel_matches_serial());
  out.push_back(bfs_depth_is_length());
  out.push_back(fc_definition_agrees());
  for (int n = 3; n <= 12; ++n) out.push_back(periodicity(n));
  out.push_back(qbinomial_interpretations());
  out.push_back(qbinomial_identities());
  out.push_back(middle_descent_table());
  out.push_back(abacus_length_law());
  out.push_back(fixed_profile_sums());
  out.push_back(longest_short_element());
  return out;
}

}  // namespace fcaffine
