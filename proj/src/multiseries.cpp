#include "fcaffine/multiseries.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fcaffine {

int Exponent::get(Var v) const {
  switch (v) {
    case Var::x: return x;
    case Var::q: return q;
    case Var::z: return z;
    case Var::s: return s;
  }
  return 0;
}

int Caps::get(Var v) const {
  switch (v) {
    case Var::x: return x;
    case Var::q: return q;
    case Var::z: return z;
    case Var::s: return s;
  }
  return 0;
}

namespace {

void set_var(Exponent& e, Var v, int value) {
  switch (v) {
    case Var::x: e.x = value; break;
    case Var::q: e.q = value; break;
    case Var::z: e.z = value; break;
    case Var::s: e.s = value; break;
  }
}

void require_same_caps(const MultiSeries& a, const MultiSeries& b) {
  if (!(a.caps() == b.caps())) throw std::invalid_argument("MultiSeries cap mismatch");
}

}  // namespace

/// Dense coefficient array over the whole cap box, indexed in the same
/// lexicographic order the sparse representation is sorted by.
class DenseBox {
 public:
  explicit DenseBox(Caps caps)
      : caps_(caps),
        sz_(caps.s + 1),
        zz_(static_cast<std::size_t>(caps.z + 1) * sz_),
        qz_(static_cast<std::size_t>(caps.q + 1) * zz_),
        data_(static_cast<std::size_t>(caps.x + 1) * qz_) {}

  explicit DenseBox(const MultiSeries& a) : DenseBox(a.caps()) {
    for (const auto& [e, c] : a.terms_) data_[index(e)] = c;
  }

  std::size_t index(const Exponent& e) const {
    return static_cast<std::size_t>(e.x) * qz_ + static_cast<std::size_t>(e.q) * zz_ +
           static_cast<std::size_t>(e.z) * sz_ + static_cast<std::size_t>(e.s);
  }
  Exponent exponent(std::size_t i) const {
    Exponent e;
    e.x = static_cast<int>(i / qz_);
    i %= qz_;
    e.q = static_cast<int>(i / zz_);
    i %= zz_;
    e.z = static_cast<int>(i / sz_);
    e.s = static_cast<int>(i % sz_);
    return e;
  }

  std::vector<BigInt>& data() { return data_; }

  MultiSeries to_series() const {
    MultiSeries out(caps_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != 0) out.terms_.emplace_back(exponent(i), data_[i]);
    return out;
  }

 private:
  Caps caps_;
  std::size_t sz_, zz_, qz_;
  std::vector<BigInt> data_;
};

MultiSeries MultiSeries::constant(Caps caps, const BigInt& c) {
  return monomial(caps, {}, c);
}

MultiSeries MultiSeries::monomial(Caps caps, Exponent e, const BigInt& c) {
  MultiSeries out(caps);
  if (c != 0 && caps.admits(e)) out.terms_.emplace_back(e, c);
  return out;
}

MultiSeries MultiSeries::from_terms(Caps caps, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  MultiSeries out(caps);
  for (auto& [e, c] : terms) {
    if (!caps.admits(e)) continue;
    if (!out.terms_.empty() && out.terms_.back().first == e) {
      out.terms_.back().second += c;
    } else {
      out.terms_.emplace_back(e, std::move(c));
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.second == 0; });
  return out;
}

MultiSeries MultiSeries::from_qpoly(Caps caps, const QPoly& p) {
  MultiSeries out(caps);
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= caps.q; ++i)
    if (c[i] != 0) out.terms_.emplace_back(Exponent{0, static_cast<int>(i), 0, 0}, c[i]);
  return out;
}

BigInt MultiSeries::coeff(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& k) { return t.first < k; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

QPoly MultiSeries::to_qpoly() const {
  std::vector<BigInt> v;
  for (const auto& [e, c] : terms_) {
    if (e.x != 0 || e.z != 0 || e.s != 0)
      throw std::invalid_argument("to_qpoly: series involves x, z or s");
    if (v.size() <= static_cast<std::size_t>(e.q)) v.resize(e.q + 1);
    v[e.q] = c;
  }
  return QPoly(std::move(v));
}

QPoly MultiSeries::qpoly_at(int x, int z, int s) const {
  std::vector<BigInt> v;
  for (const auto& [e, c] : terms_) {
    if (e.x != x || e.z != z || e.s != s) continue;
    if (v.size() <= static_cast<std::size_t>(e.q)) v.resize(e.q + 1);
    v[e.q] = c;
  }
  return QPoly(std::move(v));
}

namespace {

template <class Op>
std::vector<MultiSeries::Term> merge_terms(std::span<const MultiSeries::Term> a,
                                           std::span<const MultiSeries::Term> b, Op op) {
  std::vector<MultiSeries::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, op(BigInt(0), b[j].second));
      ++j;
    } else {
      BigInt c = op(a[i].second, b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiSeries& MultiSeries::operator+=(const MultiSeries& rhs) {
  require_same_caps(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigInt& a, const BigInt& b) { return BigInt(a + b); });
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& rhs) {
  require_same_caps(*this, rhs);
  terms_ = merge_terms(terms_, rhs.terms_, [](const BigInt& a, const BigInt& b) { return BigInt(a - b); });
  return *this;
}

MultiSeries& MultiSeries::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

std::string MultiSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    const bool unit = (e == Exponent{});
    if (unit || mag != 1) os << mag;
    const std::pair<char, int> vars[] = {{'x', e.x}, {'q', e.q}, {'z', e.z}, {'s', e.s}};
    for (auto [name, p] : vars) {
      if (p == 0) continue;
      os << name;
      if (p > 1) os << "^" << p;
    }
  }
  return os.str();
}

MultiSeries mul(const MultiSeries& a, const MultiSeries& b) {
  require_same_caps(a, b);
  const Caps caps = a.caps();
  if (a.is_zero() || b.is_zero()) return MultiSeries(caps);

  // Terms are sorted by x first, so each x-degree is a contiguous bucket.
  auto buckets = [&](std::span<const MultiSeries::Term> t) {
    std::vector<std::size_t> start(caps.x + 2, t.size());
    for (std::size_t i = t.size(); i-- > 0;) start[t[i].first.x] = i;
    for (int x = caps.x; x >= 0; --x) start[x] = std::min(start[x], start[x + 1]);
    return start;
  };
  const auto at = a.terms();
  const auto bt = b.terms();
  const auto ab = buckets(at);
  const auto bb = buckets(bt);

  const std::size_t sz = caps.s + 1;
  const std::size_t zz = static_cast<std::size_t>(caps.z + 1) * sz;
  const std::size_t slice = static_cast<std::size_t>(caps.q + 1) * zz;
  std::vector<std::vector<MultiSeries::Term>> out(caps.x + 1);

#pragma omp parallel
  {
    std::vector<BigInt> acc(slice);
    std::vector<char> touched(slice);
#pragma omp for schedule(dynamic, 1)
    for (int x0 = 0; x0 <= caps.x; ++x0) {
      std::fill(touched.begin(), touched.end(), 0);
      bool any = false;
      for (int xa = 0; xa <= x0; ++xa) {
        const int xb = x0 - xa;
        for (std::size_t i = ab[xa]; i < ab[xa + 1]; ++i) {
          const auto& [ea, ca] = at[i];
          for (std::size_t j = bb[xb]; j < bb[xb + 1]; ++j) {
            const auto& [eb, cb] = bt[j];
            const int q = ea.q + eb.q;
            if (q > caps.q) break;  // bucket is sorted by q
            const int z = ea.z + eb.z;
            const int s = ea.s + eb.s;
            if (z > caps.z || s > caps.s) continue;
            const std::size_t k = q * zz + z * sz + s;
            if (!touched[k]) {
              touched[k] = 1;
              acc[k] = ca * cb;
            } else {
              acc[k] += ca * cb;
            }
            any = true;
          }
        }
      }
      if (!any) continue;
      auto& dst = out[x0];
      for (std::size_t k = 0; k < slice; ++k) {
        if (!touched[k] || acc[k] == 0) continue;
        Exponent e{x0, static_cast<int>(k / zz), static_cast<int>((k % zz) / sz),
                   static_cast<int>(k % sz)};
        dst.emplace_back(e, acc[k]);
      }
    }
  }

  std::vector<MultiSeries::Term> terms;
  for (auto& v : out) std::move(v.begin(), v.end(), std::back_inserter(terms));
  return MultiSeries::from_terms(caps, std::move(terms));
}

MultiSeries mul_reference(const MultiSeries& a, const MultiSeries& b) {
  require_same_caps(a, b);
  std::map<Exponent, BigInt> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      const Exponent e = ea + eb;
      if (a.caps().admits(e)) acc[e] += ca * cb;
    }
  return MultiSeries::from_terms(a.caps(), {acc.begin(), acc.end()});
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) { return mul(a, b); }

MultiSeries invert(const MultiSeries& a) {
  const BigInt c0 = a.constant_term();
  if (c0 != 1 && c0 != -1) throw std::domain_error("invert: constant term is not a unit");
  const Caps caps = a.caps();
  // Newton iteration b <- b (2 - a b); the error a b - 1 squares each step,
  // so its lowest total degree doubles.
  MultiSeries b = MultiSeries::constant(caps, c0);
  const MultiSeries two = MultiSeries::constant(caps, 2);
  const long total = static_cast<long>(caps.x) + caps.q + caps.z + caps.s;
  for (long precision = 1; precision <= total; precision *= 2) {
    b = mul(b, two - mul(a, b));
  }
  return b;
}

MultiSeries divide_by_one_minus(const MultiSeries& a, const Exponent& m, const BigInt& c) {
  if (m == Exponent{}) throw std::domain_error("divide_by_one_minus: monomial must be non-constant");
  const Caps caps = a.caps();
  if (a.is_zero() || !caps.admits(m)) return a;
  DenseBox box(a);
  auto& d = box.data();
  const std::size_t off = box.index(m);
  // Lexicographic index order visits e - m before e.
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    const Exponent e = box.exponent(i) + m;
    if (!caps.admits(e)) continue;
    d[i + off] += c * d[i];
  }
  return box.to_series();
}

MultiSeries mul_monomial(const MultiSeries& a, const Exponent& m, const BigInt& c) {
  std::vector<MultiSeries::Term> terms;
  terms.reserve(a.size());
  for (const auto& [e, v] : a.terms()) {
    const Exponent f = e + m;
    if (a.caps().admits(f)) terms.emplace_back(f, v * c);
  }
  // Adding a fixed exponent preserves lexicographic order.
  MultiSeries out(a.caps());
  out = MultiSeries::from_terms(a.caps(), std::move(terms));
  return out;
}

MultiSeries q_pochhammer(const MultiSeries& a, int n) {
  const Caps caps = a.caps();
  MultiSeries out = MultiSeries::constant(caps, 1);
  const MultiSeries one = out;
  for (int i = 0; i < n; ++i) out = mul(out, one - mul_monomial(a, Exponent{0, i, 0, 0}));
  return out;
}

MultiSeries substitute_s_scale(const MultiSeries& a, int power) {
  std::vector<MultiSeries::Term> terms;
  terms.reserve(a.size());
  for (const auto& [e, c] : a.terms()) {
    Exponent f = e;
    f.q += power * e.s;
    if (a.caps().admits(f)) terms.emplace_back(f, c);
  }
  return MultiSeries::from_terms(a.caps(), std::move(terms));
}

MultiSeries evaluate_s_at_one(const MultiSeries& a) {
  std::vector<MultiSeries::Term> terms;
  terms.reserve(a.size());
  for (const auto& [e, c] : a.terms()) terms.emplace_back(Exponent{e.x, e.q, e.z, 0}, c);
  return MultiSeries::from_terms(a.caps(), std::move(terms));
}

MultiSeries extract(const MultiSeries& a, Var var, int degree) {
  std::vector<MultiSeries::Term> terms;
  for (const auto& [e, c] : a.terms()) {
    if (e.get(var) != degree) continue;
    Exponent f = e;
    set_var(f, var, 0);
    terms.emplace_back(f, c);
  }
  return MultiSeries::from_terms(a.caps(), std::move(terms));
}

MultiSeries restrict_caps(const MultiSeries& a, Caps caps) {
  const Caps& old = a.caps();
  if (caps.x > old.x || caps.q > old.q || caps.z > old.z || caps.s > old.s)
    throw std::invalid_argument("restrict_caps: new caps exceed old caps");
  std::vector<MultiSeries::Term> terms;
  for (const auto& t : a.terms())
    if (caps.admits(t.first)) terms.push_back(t);
  return MultiSeries::from_terms(caps, std::move(terms));
}

}  // namespace fcaffine
