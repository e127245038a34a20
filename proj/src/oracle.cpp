#include "fcaffine/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_set>

#include "json.hpp"

#include "fcaffine/formulas.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fcaffine::oracle {

namespace {

struct WindowHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

bool is_right_ascent(const AffinePermutation& w, int i) {
  return w(i) < w(i + 1);
}

int smallest_right_descent(const AffinePermutation& w) {
  for (int i = 0; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) return i;
  return -1;
}

void check_args(int n, int max_len) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
}

}  // namespace

std::vector<BigInt> LengthHistogram::fc_counts() const {
  std::vector<BigInt> out;
  out.reserve(counts.size());
  for (const auto& c : counts) out.push_back(c.fc);
  return out;
}

LengthHistogram bfs_enumerate(int n, int max_len) {
  check_args(n, max_len);
  LengthHistogram h{n, {}};
  std::vector<AffinePermutation> level{AffinePermutation::identity(n)};
  h.counts.push_back({1, 1});
  for (int len = 1; len <= max_len; ++len) {
    const long size = static_cast<long>(level.size());
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::vector<std::vector<AffinePermutation>> parts(threads);
    std::vector<long> fc(threads, 0);
#pragma omp parallel num_threads(threads)
    {
      int t = 0;
#ifdef _OPENMP
      t = omp_get_thread_num();
#endif
      auto& out = parts[t];
#pragma omp for schedule(static)
      for (long k = 0; k < size; ++k) {
        const auto& w = level[k];
        for (int i = 0; i < n; ++i) {
          if (!is_right_ascent(w, i)) continue;
          AffinePermutation child = apply_generator(w, i, Side::right);
          if (smallest_right_descent(child) != i) continue;
          fc[t] += is_fully_commutative(child);
          out.push_back(std::move(child));
        }
      }
    }
    std::vector<AffinePermutation> next;
    LengthCount c{0, 0};
    for (int t = 0; t < threads; ++t) {
      c.total += parts[t].size();
      c.fc += fc[t];
      std::move(parts[t].begin(), parts[t].end(), std::back_inserter(next));
    }
    h.counts.push_back(c);
    level = std::move(next);
  }
  return h;
}

LengthHistogram bfs_enumerate_serial(int n, int max_len) {
  check_args(n, max_len);
  LengthHistogram h{n, {}};
  std::unordered_set<std::vector<int>, WindowHash> previous;
  std::unordered_set<std::vector<int>, WindowHash> current;
  const AffinePermutation id = AffinePermutation::identity(n);
  current.emplace(id.window().begin(), id.window().end());
  h.counts.push_back({1, 1});
  for (int len = 1; len <= max_len; ++len) {
    std::unordered_set<std::vector<int>, WindowHash> next;
    for (const auto& win : current) {
      const AffinePermutation w(win);
      for (int i = 0; i < n; ++i) {
        const AffinePermutation child = apply_generator(w, i, Side::right);
        std::vector<int> key(child.window().begin(), child.window().end());
        if (previous.contains(key) || current.contains(key)) continue;
        next.insert(std::move(key));
      }
    }
    LengthCount c{BigInt(next.size()), 0};
    long fc = 0;
    for (const auto& win : next) fc += is_fully_commutative(AffinePermutation(win));
    c.fc = fc;
    h.counts.push_back(c);
    previous = std::move(current);
    current = std::move(next);
  }
  return h;
}

std::vector<std::vector<AffinePermutation>> elements_by_depth(int n, int max_len) {
  check_args(n, max_len);
  std::vector<std::vector<AffinePermutation>> levels{{AffinePermutation::identity(n)}};
  std::set<AffinePermutation> seen(levels[0].begin(), levels[0].end());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffinePermutation> next;
    for (const auto& w : levels.back())
      for (int i = 0; i < n; ++i) {
        AffinePermutation child = apply_generator(w, i, Side::right);
        if (seen.insert(child).second) next.push_back(std::move(child));
      }
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return levels;
}

std::string histogram_json(const LengthHistogram& h) {
  nlohmann::ordered_json lengths = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < h.counts.size(); ++l) {
    nlohmann::ordered_json row;
    row["l"] = l;
    row["total"] = h.counts[l].total.str();
    row["fc"] = h.counts[l].fc.str();
    lengths.push_back(std::move(row));
  }
  nlohmann::ordered_json j;
  j["n"] = h.n;
  j["lengths"] = std::move(lengths);
  return j.dump();
}

std::vector<int> reduced_word(const AffinePermutation& w) {
  std::vector<int> word;
  AffinePermutation v = w;
  for (int i = smallest_right_descent(v); i >= 0; i = smallest_right_descent(v)) {
    word.push_back(i);
    v = apply_generator(v, i, Side::right);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

AffinePermutation from_word(int n, std::span<const int> word) {
  AffinePermutation w = AffinePermutation::identity(n);
  for (int i : word) w = apply_generator(w, i, Side::right);
  return w;
}

bool generators_commute(int n, int a, int b) {
  if (n == 2) return false;
  const long d = mod_floor(a - b, n);
  return d != 0 && d != 1 && d != n - 1;
}

bool fc_by_definition(const AffinePermutation& w, std::size_t closure_limit) {
  const int n = w.rank();
  const std::vector<int> start = reduced_word(w);
  // In rank 2 the two generators generate an infinite dihedral group: no
  // braid relation, so every element has a unique reduced word.
  const auto has_short_braid = [n](const std::vector<int>& word) {
    if (n == 2) return false;
    for (std::size_t k = 0; k + 2 < word.size(); ++k) {
      const long d = mod_floor(word[k + 1] - word[k], n);
      if (word[k] == word[k + 2] && (d == 1 || d == n - 1)) return true;
    }
    return false;
  };
  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> stack{start};
  while (!stack.empty()) {
    std::vector<int> word = std::move(stack.back());
    stack.pop_back();
    if (has_short_braid(word)) return false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (!generators_commute(n, word[k], word[k + 1])) continue;
      std::swap(word[k], word[k + 1]);
      if (seen.insert(word).second) {
        if (seen.size() > closure_limit)
          throw ClosureLimitExceeded("commutation class exceeds " + std::to_string(closure_limit) +
                                     " words");
        stack.push_back(word);
      }
      std::swap(word[k], word[k + 1]);
    }
  }
  return true;
}

DescentStats descent_stats(std::span<const int> one_line) {
  DescentStats st;
  st.size = static_cast<int>(one_line.size());
  int first = 0;
  int last = 0;
  for (int p = 1; p < st.size; ++p) {
    if (one_line[p - 1] > one_line[p]) {
      ++st.descents;
      if (first == 0) first = p;
      last = p;
    }
    for (int q = 0; q < p; ++q) st.inversions += one_line[q] > one_line[p];
  }
  st.left_run = st.descents ? first : st.size;
  st.right_run = st.descents ? st.size - last : st.size;
  return st;
}

DescentStatTable finite_321_stats(int max_size) {
  if (max_size < 0 || max_size > 10) throw std::invalid_argument("finite_321_stats: max_size must be in [0, 10]");
  DescentStatTable table;
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> prefix;
    std::vector<bool> used(size + 1, false);
    // Appending v creates a 321 exactly when some earlier entry b, itself
    // preceded by something larger, exceeds v.
    std::function<void(int, int)> extend = [&](int top, int guard) {
      if (static_cast<int>(prefix.size()) == size) {
        ++table[descent_stats(prefix)];
        return;
      }
      for (int v = 1; v <= size; ++v) {
        if (used[v] || v < guard) continue;
        used[v] = true;
        prefix.push_back(v);
        extend(std::max(top, v), v < top ? std::max(guard, v) : guard);
        prefix.pop_back();
        used[v] = false;
      }
    };
    extend(0, 0);
  }
  return table;
}

MultiSeries multi_descent_series(const DescentStatTable& table, Caps caps) {
  std::vector<MultiSeries::Term> terms;
  for (const auto& [st, count] : table) {
    if (st.descents < 2) continue;
    terms.push_back({{st.size, st.inversions, st.left_run, st.right_run}, count});
  }
  return MultiSeries::from_terms(caps, std::move(terms));
}

QPoly finite_fc_polynomial(const DescentStatTable& table, int size) {
  QPoly p;
  for (const auto& [st, count] : table)
    if (st.size == size) p += QPoly::monomial(count, st.inversions);
  return p;
}

PeriodicityReport periodicity_report(int n, std::span<const BigInt> coeffs) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  PeriodicityReport r;
  r.n = n;
  r.proven_onset = n + 2L * (n / 2) * ((n + 1) / 2);
  r.conjectured_onset = 1 + static_cast<long>((n - 1) / 2) * (n / 2);
  const long top = static_cast<long>(coeffs.size()) - 1;
  if (top < r.proven_onset + 2L * n)
    throw std::invalid_argument("periodicity_report: need coefficients through q^" +
                                std::to_string(r.proven_onset + 2L * n));
  const auto periodic_from = [&](long from, int m) {
    for (long i = from; i + m <= top; ++i)
      if (coeffs[i + m] != coeffs[i]) return false;
    return true;
  };
  r.period = n;
  for (int m = 1; m <= n; ++m)
    if (periodic_from(r.proven_onset, m)) {
      r.period = m;
      break;
    }
  r.onset = r.proven_onset;
  while (r.onset > 0 && periodic_from(r.onset - 1, r.period)) --r.onset;
  r.cycle.assign(coeffs.begin() + r.onset, coeffs.begin() + r.onset + r.period);
  r.period_divides_n = periodic_from(r.proven_onset, r.period) && n % r.period == 0;
  if (is_prime(n)) {
    r.prime_tail = stable_prime_value(n);
    r.prime_tail_ok = r.period == 1 && r.cycle.front() == *r.prime_tail;
  }
  return r;
}

PeriodicityReport periodicity_report(const LengthHistogram& h) {
  const std::vector<BigInt> a = h.fc_counts();
  return periodicity_report(h.n, a);
}

std::vector<ShortElement> short_fc_elements(int n) {
  if (n < 2) throw std::invalid_argument("rank n must be at least 2");
  std::vector<FinitePermutation> perms;
  std::vector<int> one_line(n);
  for (int i = 0; i < n; ++i) one_line[i] = i + 1;
  do perms.emplace_back(one_line);
  while (std::next_permutation(one_line.begin(), one_line.end()));

  std::vector<ShortElement> out;
  for (const Abacus& a : short_fc_abaci(n)) {
    const AffinePermutation w0 = balanced_coset_rep(a);
    const LMRProfile profile = lmr_profile(a);
    for (const auto& u : perms) {
      AffinePermutation w = compose(w0, u);
      if (!is_fully_commutative(w)) continue;
      const long len = coxeter_length(w);
      out.push_back({std::move(w), w0, u, profile, len});
    }
  }
  return out;
}

long max_short_length(int n) {
  long best = 0;
  for (const auto& e : short_fc_elements(n)) best = std::max(best, e.length);
  return best;
}

ShortCase short_case(const ShortElement& e) {
  const auto [L, M, R] = e.profile;
  if (R == 0) return ShortCase::finite_block;
  // u(p) is the rank of window entry p among the sorted coset-rep window:
  // ranks 1..L are left entries, the next M middle, the rest right.
  const auto u = e.finite.one_line();
  bool right_seen = false;
  for (int v : u) {
    if (v > L + M) right_seen = true;
    if (v <= L && right_seen) return ShortCase::intertwined;
  }
  int descents = 0;
  int previous = 0;
  for (int v : u) {
    if (v <= L || v > L + M) continue;
    if (previous > v) ++descents;
    previous = v;
  }
  if (descents == 0) return ShortCase::no_middle_descent;
  if (descents == 1) return ShortCase::one_middle_descent;
  return ShortCase::many_middle_descents;
}

namespace {

void check_qbinom_args(int n) {
  if (n < 0) throw std::invalid_argument("q-binomial: n must be nonnegative");
}

}  // namespace

QPoly qbinom_by_multiset_inversions(int n, int k) {
  check_qbinom_args(n);
  if (k < 0 || k > n) return {};
  if (n > 20) throw std::invalid_argument("qbinom_by_multiset_inversions: n too large");
  std::vector<BigInt> c(k * (n - k) + 1);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    // Word reads bit 0 first; an inversion is a 1 before a 0.
    int ones = 0;
    int inv = 0;
    for (int p = 0; p < n; ++p) {
      if (mask >> p & 1ul)
        ++ones;
      else
        inv += ones;
    }
    ++c[inv];
  }
  return QPoly(std::move(c));
}

QPoly qbinom_by_partitions_in_box(int n, int k) {
  check_qbinom_args(n);
  if (k < 0 || k > n) return {};
  const int width = n - k;
  std::vector<BigInt> c(k * width + 1);
  std::function<void(int, int, int)> parts = [&](int rows_left, int max_part, int size) {
    if (rows_left == 0) {
      ++c[size];
      return;
    }
    for (int p = 0; p <= max_part; ++p) parts(rows_left - 1, p, size + p);
  };
  parts(k, width, 0);
  return QPoly(std::move(c));
}

QPoly qbinom_by_subsets(int n, int k) {
  check_qbinom_args(n);
  if (k < 0 || k > n) return {};
  std::vector<BigInt> c(k * (n - k) + 1);
  const int base = k * (k + 1) / 2;
  std::function<void(int, int, int)> pick = [&](int next, int chosen, int sum) {
    if (chosen == k) {
      ++c[sum - base];
      return;
    }
    for (int v = next; v <= n - (k - chosen) + 1; ++v) pick(v + 1, chosen + 1, sum + v);
  };
  pick(1, 0, 0);
  return QPoly(std::move(c));
}

}  // namespace fcaffine::oracle
