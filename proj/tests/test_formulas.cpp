#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "fcaffine/formulas.hpp"
#include "fcaffine/oracle.hpp"
#include "fcaffine/qcombinatorics.hpp"

using namespace fcaffine;

namespace {

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Inversion polynomial of the 321-avoiding permutations of [n], by brute force.
QPoly avoiders(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  QPoly p;
  do {
    const FinitePermutation u(v);
    if (!u.contains_321()) p += QPoly::monomial(1, u.inversions());
  } while (std::next_permutation(v.begin(), v.end()));
  return p;
}

}  // namespace

TEST_CASE("default configuration") {
  CHECK(AssemblyConfig::defaults(12).q_cap == 12 + 72 + 36);
  CHECK(AssemblyConfig::defaults(3).q_cap == 3 + 4 + 9);
  CHECK_THROWS_AS(AssemblyConfig::defaults(1), std::invalid_argument);
}

TEST_CASE("long elements") {
  // q^2 (1 + q)^2 / (1 - q^2) = q^2 + 2q^3 + 2q^4 + ...
  CHECK(long_gf(2, 6) == QPoly{0, 0, 1, 2, 2, 2, 2});
  const QPoly l5 = long_gf(5, 40);
  CHECK(l5.coeff(5) == 4);
  CHECK(l5.coeff(40) == 50);
  CHECK(l5.all_nonnegative());
  CHECK(long_gf(7, 60).coeff(60) == 490);
}

TEST_CASE("finite FC permutations") {
  const MultiSeries c = finite_fc_gf(8, 28);
  CHECK(c.qpoly_at(0, 0, 0) == QPoly{1});
  CHECK(c.qpoly_at(1, 0, 0) == QPoly{1});
  CHECK(c.qpoly_at(3, 0, 0) == QPoly{1, 2, 2});
  for (int n = 0; n <= 8; ++n) {
    CHECK(c.qpoly_at(n, 0, 0).at_one() == catalan(n));
    CHECK(c.qpoly_at(n, 0, 0) == avoiders(n));
  }
}

TEST_CASE("closed-form summands") {
  CHECK(s0_at(1, 1, 0, 10) == QPoly{1});
  CHECK(s0_at(2, 1, 1, 10) == QPoly{1, 2, 1});
  CHECK(s1_at(3, 2, 0, 10).is_zero());
  CHECK(s1_at(3, 2, 1, 10).is_zero());
  CHECK(s1_at(1, 1, 2, 10) == QPoly{0, 1, 2, 1});
  CHECK(sI_at(1, 1, 0, 10) == QPoly{0, 1});
  for (int L = 1; L <= 4; ++L)
    for (int R = 1; R <= 4; ++R)
      for (int M = 0; M <= 4; ++M) {
        CHECK(s0_at(L, R, M, 30).all_nonnegative());
        CHECK(s1_at(L, R, M, 30).all_nonnegative());
        CHECK(sI_at(L, R, M, 30).all_nonnegative());
      }
}

TEST_CASE("middle-descent series") {
  const Caps caps{7, 21, 7, 7};
  const auto parts = middle_descent_parts(caps);
  CHECK(middle_descent_residual(parts).is_zero());
  const MultiSeries d = middle_descent_series(caps);
  CHECK(d.caps() == caps);
  for (int m = 0; m <= 3; ++m) CHECK(extract(d, Var::x, m).is_zero());
  // [2,1,4,3]: two inversions, one entry before the first descent, one after the last.
  CHECK(d.coeff({4, 2, 1, 1}) == 1);
  CHECK(d == oracle::multi_descent_series(oracle::finite_321_stats(7), caps));
  for (const auto& [e, c] : d.terms()) {
    CHECK(c > 0);
    CHECK(e.z >= 1);
    CHECK(e.s >= 1);
  }
}

TEST_CASE("many-descent summand") {
  const Caps caps{5, 10, 5, 5};
  const MultiSeries d = middle_descent_series(caps);
  for (int M = 0; M <= 3; ++M) CHECK(s2_at(1, 1, M, d, 20).is_zero());
  // Size 4 with two descents: [2,1,4,3] and [3,1,4,2], both with i = j = 1.
  const QPoly both = QPoly{0, 0, 1, 1} * q_binomial(2, 1) * q_binomial(2, 1);
  CHECK(s2_at(1, 1, 4, d, 20) == both);
  CHECK(s2_at(2, 3, 5, d, 40).all_nonnegative());
  CHECK_THROWS_AS(s2_at(1, 1, 6, d, 20), std::invalid_argument);
}

TEST_CASE("breakdown records") {
  const SBreakdown b = short_breakdown(AssemblyConfig::defaults(6));
  CHECK(b.n == 6);
  CHECK(b.records.size() == 15);
  for (const auto& r : b.records) {
    CHECK(r.L + r.R + r.M == 6);
    CHECK(r.prefactor == q_binomial(r.L + r.R - 2, r.L - 1).shifted(r.L + r.R - 1));
    for (const QPoly* p : {&r.intertwined, &r.no_descent, &r.one_descent, &r.many_descent})
      CHECK(p->all_nonnegative());
  }
}

TEST_CASE("assembled series") {
  CHECK(assemble_f(3, 6) == QPoly{1, 3, 6, 6, 6, 6, 6});
  CHECK(assemble_f(4, 8) == QPoly{1, 4, 10, 16, 18, 16, 18, 16, 18});
  CHECK(assemble_f(7, 15).coeff(15) == 490);
  CHECK(assemble_f(12, AssemblyConfig::defaults(12).q_cap).coeff(50) == 225414);
  // Rank 2: every element of the infinite dihedral group is FC.
  CHECK(assemble_f(2, 6) == QPoly{1, 2, 2, 2, 2, 2, 2});
  for (int n = 2; n <= 9; ++n) {
    const QPoly f = assemble_f(AssemblyConfig::defaults(n));
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == n);
    CHECK(f.all_nonnegative());
  }
}

TEST_CASE("periodicity of the assembled series") {
  for (int n = 3; n <= 12; ++n) {
    const auto cfg = AssemblyConfig::defaults(n);
    const QPoly f = assemble_f(cfg);
    const int onset = n + 2 * (n / 2) * ((n + 1) / 2);
    CHECK(cfg.q_cap - onset >= 3 * n);
    for (int i = onset; i + n <= cfg.q_cap; ++i) CHECK(f.coeff(i + n) == f.coeff(i));
    if (is_prime(n))
      for (int i = onset; i <= cfg.q_cap; ++i) CHECK(f.coeff(i) == stable_prime_value(n));
  }
}

TEST_CASE("stable prime values") {
  CHECK(stable_prime_value(3) == 6);
  CHECK(stable_prime_value(5) == 50);
  CHECK(stable_prime_value(7) == 490);
  CHECK(stable_prime_value(11) == 64130);
  CHECK_THROWS_AS(stable_prime_value(9), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("case polynomials match classified short elements") {
  for (int n = 3; n <= 6; ++n) {
    const int cap = 12;
    const SBreakdown b = short_breakdown({n, cap});
    const auto elements = oracle::short_fc_elements(n);
    for (const auto& r : b.records) {
      QPoly by_case[4];
      for (const auto& e : elements) {
        if (e.profile.left != r.L || e.profile.right != r.R || e.length > cap) continue;
        by_case[static_cast<int>(oracle::short_case(e)) - 1] += QPoly::monomial(1, e.length);
      }
      CHECK(by_case[0] == mul_truncated(r.prefactor, r.intertwined, cap));
      CHECK(by_case[1] == mul_truncated(r.prefactor, r.no_descent, cap));
      CHECK(by_case[2] == mul_truncated(r.prefactor, r.one_descent, cap));
      CHECK(by_case[3] == mul_truncated(r.prefactor, r.many_descent, cap));
    }
  }
}
