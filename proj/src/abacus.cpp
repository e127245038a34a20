#include "fcaffine/abacus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fcaffine {

namespace {

int runner_of(long position, int n) { return static_cast<int>(mod_floor(position - 1, n)) + 1; }

void require_normalized(const Abacus& a) {
  if (!a.is_normalized()) throw std::invalid_argument("abacus is not normalized");
}

}  // namespace

Abacus::Abacus(int n, std::vector<long> lowest_beads) : n_(n), by_runner_(n, 0) {
  if (n < 1 || static_cast<int>(lowest_beads.size()) != n)
    throw std::invalid_argument("abacus needs exactly one lowest bead per runner");
  std::vector<char> seen(n, 0);
  for (long p : lowest_beads) {
    const int r = runner_of(p, n);
    if (seen[r - 1]) throw std::invalid_argument("two lowest beads on one runner");
    seen[r - 1] = 1;
    by_runner_[r - 1] = p;
  }
}

std::vector<long> Abacus::positions() const {
  std::vector<long> v = by_runner_;
  std::sort(v.begin(), v.end());
  return v;
}

long Abacus::last_bead() const { return *std::max_element(by_runner_.begin(), by_runner_.end()); }

bool Abacus::is_bead(long position) const { return position <= by_runner_[runner_of(position, n_) - 1]; }

bool Abacus::is_balanced() const {
  return std::accumulate(by_runner_.begin(), by_runner_.end(), 0L) ==
         static_cast<long>(n_) * (n_ + 1) / 2;
}

bool Abacus::is_normalized() const {
  return *std::min_element(by_runner_.begin(), by_runner_.end()) == 1;
}

std::string Abacus::render(bool labels) const {
  const long lo = *std::min_element(by_runner_.begin(), by_runner_.end()) - n_;
  const long hi = last_bead() + n_;
  const long first_level = floor_div(lo - 1, n_);
  const long last_level = floor_div(hi - 1, n_);
  std::size_t width = 1;
  if (labels) {
    for (long p : {first_level * n_ + 1, last_level * n_ + n_})
      width = std::max(width, std::to_string(p).size() + 2);
  }
  std::ostringstream os;
  for (long level = first_level; level <= last_level; ++level) {
    for (int r = 1; r <= n_; ++r) {
      const long p = level * n_ + r;
      if (r > 1) os << ' ';
      if (!labels) {
        os << (is_bead(p) ? 'O' : '.');
      } else {
        const std::string cell = is_bead(p) ? "(" + std::to_string(p) + ")" : std::to_string(p);
        os << std::string(width - cell.size(), ' ') << cell;
      }
    }
    os << '\n';
  }
  return os.str();
}

Abacus abacus_from_coset_rep(const AffinePermutation& w0) {
  const auto w = w0.window();
  if (!std::is_sorted(w.begin(), w.end()))
    throw std::invalid_argument("window " + w0.to_string() + " is not sorted");
  return Abacus(w0.rank(), std::vector<long>(w.begin(), w.end()));
}

Abacus normalize(const Abacus& a) {
  const auto pos = a.positions();
  const long shift = 1 - pos.front();
  std::vector<long> moved;
  for (long p : pos) moved.push_back(p + shift);
  return Abacus(a.runners(), std::move(moved));
}

AffinePermutation balanced_coset_rep(const Abacus& a) {
  const long n = a.runners();
  auto pos = a.positions();
  const long excess = std::accumulate(pos.begin(), pos.end(), 0L) - n * (n + 1) / 2;
  // Distinct residues force excess to be a multiple of n.
  const long shift = excess / n;
  std::vector<int> window;
  for (long p : pos) window.push_back(static_cast<int>(p - shift));
  return AffinePermutation(std::move(window));
}

long abacus_length(const Abacus& a) {
  const long n = a.runners();
  long total = 0;
  for (int i = 1; i <= n; ++i) {
    const long b = a.lowest_bead(i);
    for (int r = 1; r <= n; ++r) {
      // Gaps on runner r sit at lowest_bead(r) + t n for t >= 1.
      const long d = b - a.lowest_bead(r) - 1;
      if (d > 0) total += floor_div(d, n);
    }
  }
  return total;
}

ElementClass classify(const Abacus& a) {
  require_normalized(a);
  return a.last_bead() > 2L * a.runners() ? ElementClass::long_element : ElementClass::short_element;
}

bool is_fc_coset_rep(const Abacus& a) {
  require_normalized(a);
  const long n = a.runners();
  const long last = a.last_bead();
  for (long p : a.positions()) {
    const bool low = p >= 1 && p <= n;
    const bool high = p >= last - n + 1 && p <= last;
    if (!low && !high) return false;
  }
  return true;
}

std::string LMRProfile::to_string() const {
  return "(" + std::to_string(left) + ")(" + std::to_string(middle) + ")(" + std::to_string(right) + ")";
}

LMRProfile lmr_profile(const Abacus& a) {
  require_normalized(a);
  if (classify(a) != ElementClass::short_element) throw std::invalid_argument("abacus is long");
  if (!is_fc_coset_rep(a)) throw std::invalid_argument("abacus is not fully commutative");
  const long n = a.runners();
  const auto pos = a.positions();
  LMRProfile prof;
  long last_right = 0;
  for (long p : pos)
    if (p > n) {
      ++prof.right;
      last_right = std::max(last_right, p);
    }
  const long j = prof.right > 0 ? last_right - n : n;
  for (long p : pos)
    if (p >= j + 1 && p <= n) ++prof.middle;
  prof.left = static_cast<int>(n) - prof.middle - prof.right;
  return prof;
}

std::vector<Abacus> short_fc_abaci(int n) {
  std::vector<Abacus> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<long> beads{1};
    for (int r = 2; r <= n; ++r) beads.push_back((mask >> (r - 2)) & 1u ? n + r : r);
    out.emplace_back(n, std::move(beads));
  }
  return out;
}

std::vector<Abacus> lmr_abaci(LMRProfile profile) {
  const int L = profile.left, M = profile.middle, R = profile.right;
  if (L < 1 || R < 1 || M < 0) throw std::invalid_argument("lmr_abaci needs L >= 1, R >= 1, M >= 0");
  const int n = L + M + R;
  const int slots = L + R - 2;  // positions n+2 .. 2n-M-1
  std::vector<Abacus> out;
  // Choose which of the slots carry the R - 1 free beads; iterate choices as
  // increasing index tuples in lexicographic order.
  std::vector<int> pick(R - 1);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<char> bead(n + 1, 0);  // bead[r]: runner r lowest at n + r
    bead[n - M] = 1;
    for (int k : pick) bead[k + 2] = 1;
    std::vector<long> beads;
    for (int r = 1; r <= n; ++r) beads.push_back(bead[r] ? n + r : r);
    out.emplace_back(n, std::move(beads));
    int i = R - 2;
    while (i >= 0 && pick[i] == slots - (R - 1) + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int k = i + 1; k < R - 1; ++k) pick[k] = pick[k - 1] + 1;
  }
  return out;
}

}  // namespace fcaffine
