#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "fcaffine/affine.hpp"
#include "fcaffine/oracle.hpp"

using namespace fcaffine;

namespace {

AffinePermutation random_element(int n, int steps, std::mt19937& rng) {
  AffinePermutation w = AffinePermutation::identity(n);
  for (int k = 0; k < steps; ++k)
    w = apply_generator(w, std::uniform_int_distribution<int>(0, n - 1)(rng), Side::right);
  return w;
}

const AffinePermutation example({-1, -4, 14, 1});

}  // namespace

TEST_CASE("construction validates the window") {
  CHECK_THROWS_AS(AffinePermutation({1}), std::invalid_argument);
  CHECK_THROWS_AS(AffinePermutation({1, 3, 2, 5}), std::invalid_argument);  // residues repeat
  CHECK_THROWS_AS(AffinePermutation({2, 3, 4, 5}), std::invalid_argument);  // wrong sum
  CHECK_THROWS_AS(FinitePermutation({1, 1, 3}), std::invalid_argument);
  CHECK_NOTHROW(AffinePermutation({0, 3}));
}

TEST_CASE("value_at") {
  const auto id = AffinePermutation::identity(4);
  CHECK(value_at(id, 7) == 7);
  const AffinePermutation w0({-4, -1, 1, 14});
  CHECK(value_at(w0, 0) == 10);
  CHECK(value_at(w0, -7) == -12);
  CHECK(value_at(example, 2) == -4);
  CHECK(value_at(example, 0) == -3);
  for (long i = -9; i < 9; ++i) CHECK(value_at(example, i + 4) - value_at(example, i) == 4);
}

TEST_CASE("coxeter_length") {
  CHECK(coxeter_length(AffinePermutation::identity(5)) == 0);
  CHECK(coxeter_length(example) == 13);
  CHECK(coxeter_length(AffinePermutation({-4, -1, 1, 14})) == 11);
}

TEST_CASE("length equals BFS depth") {
  for (int n = 2; n <= 4; ++n) {
    const auto levels = oracle::elements_by_depth(n, 8);
    for (std::size_t d = 0; d < levels.size(); ++d)
      for (const auto& w : levels[d]) CHECK(coxeter_length(w) == static_cast<long>(d));
  }
}

TEST_CASE("apply_generator") {
  const auto id = AffinePermutation::identity(4);
  const auto s1 = apply_generator(id, 1, Side::right);
  CHECK(s1 == AffinePermutation({2, 1, 3, 4}));
  CHECK(coxeter_length(s1) == 1);
  CHECK(apply_generator(id, 0, Side::right) == AffinePermutation({0, 2, 3, 5}));
  CHECK(apply_generator(id, 0, Side::left) == AffinePermutation({0, 2, 3, 5}));

  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto w = random_element(n, 12, rng);
    const long len = coxeter_length(w);
    CHECK(coxeter_length(inverse(w)) == len);
    for (int i = 0; i < n; ++i)
      for (Side side : {Side::left, Side::right}) {
        const auto v = apply_generator(w, i, side);
        CHECK(apply_generator(v, i, side) == w);
        CHECK(std::abs(coxeter_length(v) - len) == 1);
        const auto win = v.window();
        CHECK(std::accumulate(win.begin(), win.end(), 0L) == n * (n + 1L) / 2);
      }
    // s_i w = (w^{-1} s_i)^{-1}
    const int i = std::uniform_int_distribution<int>(0, n - 1)(rng);
    CHECK(apply_generator(w, i, Side::left) == inverse(apply_generator(inverse(w), i, Side::right)));
  }
}

TEST_CASE("compose and inverse") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto a = random_element(n, 10, rng);
    const auto b = random_element(n, 10, rng);
    CHECK(compose(a, inverse(a)) == AffinePermutation::identity(n));
    for (long i = -2 * n; i < 2 * n; ++i) CHECK(compose(a, b)(i) == a(b(i)));
  }
}

TEST_CASE("is_fully_commutative") {
  CHECK(is_fully_commutative(AffinePermutation::identity(4)));
  CHECK_FALSE(is_fully_commutative(AffinePermutation({-4, -1, 1, 14})));
  CHECK(has_321_in_range(AffinePermutation({-4, -1, 1, 14}), -10, 10));
}

TEST_CASE("exact FC test agrees with the K-window search") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto w = random_element(n, std::uniform_int_distribution<int>(0, 25)(rng), rng);
    const long k = search_radius(w);
    CHECK(is_fully_commutative(w) == !has_321_in_range(w, 1 - k * n, n + k * n));
  }
}

TEST_CASE("FC test agrees with the commutation-class definition") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& level : oracle::elements_by_depth(n, n == 5 ? 7 : 9))
      for (const auto& w : level) CHECK(is_fully_commutative(w) == oracle::fc_by_definition(w));
}

TEST_CASE("finite permutations: FC iff 321-avoiding, and the length bound") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    const int bound = (n / 2) * ((n + 1) / 2);
    do {
      const FinitePermutation u(v);
      bool brute = false;
      for (int i = 0; i < n && !brute; ++i)
        for (int j = i + 1; j < n && !brute; ++j)
          for (int k = j + 1; k < n && !brute; ++k) brute = v[i] > v[j] && v[j] > v[k];
      CHECK(u.contains_321() == brute);
      if (n >= 2) {
        const bool fc = is_fully_commutative(AffinePermutation::from_finite(u));
        CHECK(fc == !brute);
        if (fc) CHECK(u.inversions() <= bound);
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("parabolic_decompose") {
  const auto [w0, u] = parabolic_decompose(example);
  CHECK(w0 == AffinePermutation({-4, -1, 1, 14}));
  CHECK(u == FinitePermutation({2, 1, 4, 3}));
  const auto sorted = parabolic_decompose(AffinePermutation({-4, -1, 1, 14}));
  CHECK(sorted.finite == FinitePermutation::identity(4));

  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const auto w = random_element(n, 15, rng);
    const auto d = parabolic_decompose(w);
    CHECK(std::is_sorted(d.coset_rep.window().begin(), d.coset_rep.window().end()));
    CHECK(compose(d.coset_rep, d.finite) == w);
    CHECK(coxeter_length(w) == coxeter_length(d.coset_rep) + d.finite.inversions());
  }
}

TEST_CASE("descent_set") {
  CHECK(descent_set(AffinePermutation::identity(3), Side::right).empty());
  CHECK(descent_set(example, Side::right) == std::vector<int>{1, 3});
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto w = random_element(n, 10, rng);
    for (Side side : {Side::left, Side::right}) {
      const auto d = descent_set(w, side);
      for (int i = 0; i < n; ++i) {
        const bool down = coxeter_length(apply_generator(w, i, side)) < coxeter_length(w);
        CHECK(down == std::binary_search(d.begin(), d.end(), i));
      }
    }
  }
}

TEST_CASE("parse_window and to_string") {
  CHECK(parse_window("[-1,-4,14,1]") == std::vector<int>{-1, -4, 14, 1});
  CHECK(parse_window("-1 -4 14 1") == std::vector<int>{-1, -4, 14, 1});
  CHECK(parse_window("-1, -4, 14, 1") == std::vector<int>{-1, -4, 14, 1});
  CHECK_THROWS_AS(parse_window("1,a,3"), std::invalid_argument);
  CHECK(example.to_string() == "[-1,-4,14,1]");
}
