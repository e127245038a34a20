// Times the OpenMP kernels against their serial references.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

#include "fcaffine/formulas.hpp"
#include "fcaffine/multiseries.hpp"
#include "fcaffine/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fcaffine;

namespace {

double seconds(const std::function<void()>& f, int repeat) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < repeat; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / repeat;
}

void row(const std::string& name, double parallel, double serial, bool same) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4)
            << std::setw(12) << parallel << std::setw(12) << serial << std::setw(10) << std::setprecision(2)
            << serial / parallel << "  " << (same ? "equal" : "DIFFERENT") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const int repeat = argc > 1 ? std::stoi(argv[1]) : 3;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads " << threads << ", repeat " << repeat << "\n\n";
  std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12) << "parallel s" << std::setw(12)
            << "serial s" << std::setw(10) << "speedup" << '\n';

  const Caps caps{10, 40, 6, 6};
  std::mt19937 rng(1);
  const auto dense = [&] {
    std::vector<MultiSeries::Term> t;
    for (int k = 0; k < 3000; ++k)
      t.push_back({{std::uniform_int_distribution<int>(0, 10)(rng), std::uniform_int_distribution<int>(0, 40)(rng),
                    std::uniform_int_distribution<int>(0, 6)(rng), std::uniform_int_distribution<int>(0, 6)(rng)},
                   std::uniform_int_distribution<int>(-9, 9)(rng)});
    return MultiSeries::from_terms(caps, std::move(t));
  };
  const MultiSeries a = dense();
  const MultiSeries b = dense();
  MultiSeries p(caps), s(caps);
  const double tp = seconds([&] { p = mul(a, b); }, repeat);
  const double ts = seconds([&] { s = mul_reference(a, b); }, repeat);
  row("series product (3000 terms)", tp, ts, p == s);

  const Caps mid{9, 36, 9, 9};
  const double kp = seconds([&] { (void)middle_descent_parts(mid); }, 1);
  std::cout << std::left << std::setw(28) << "middle-descent kernel" << std::right << std::fixed
            << std::setprecision(4) << std::setw(12) << kp << '\n';

  for (int n : {5, 6}) {
    const int len = n == 5 ? 22 : 26;
    oracle::LengthHistogram hp, hs;
    const double bp = seconds([&] { hp = oracle::bfs_enumerate(n, len); }, 1);
    const double bs = seconds([&] { hs = oracle::bfs_enumerate_serial(n, len); }, 1);
    row("bfs n=" + std::to_string(n) + " to length " + std::to_string(len), bp, bs, hp == hs);
  }

  const double f12 = seconds([] { (void)assemble_f(12, AssemblyConfig::defaults(12).q_cap); }, 1);
  std::cout << "\nassemble_f n=12 (default cap) " << std::fixed << std::setprecision(4) << f12 << " s\n";
  return 0;
}
