#include "plcurve/algebra/upoly.hpp"

#include <algorithm>
#include <climits>

#include "detail/modp.hpp"
#include "plcurve/error.hpp"

namespace plc {

using detail::u64;

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::identity() { return UPoly({Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly m = *this;
  const Rational inv = 1 / lc();
  for (auto& c : m.c_) c *= inv;
  return m;
}

int UPoly::order_at_zero() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational inv_lc = 1 / b.lc();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const Rational q = rem[i] * inv_lc;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::vector<Integer> primitive_integer_coeffs(const UPoly& p) {
  std::vector<Rational> v = p.coeffs();
  const Integer l = denominator_lcm(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& c : v) {
    out.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g == 0) return out;
  if (out.back() < 0) g = -g;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

using ModPoly = std::vector<u64>;  // low to high, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const std::vector<Integer>& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = detail::reduce(a[i], p);
  trim(r);
  return r;
}

// a mod b in place; b nonzero.
void modp_rem(ModPoly& a, const ModPoly& b, u64 p) {
  const u64 inv = detail::invmod(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const u64 q = detail::mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = detail::submod(a[shift + j], detail::mulmod(q, b[j], p), p);
    }
    trim(a);
  }
}

ModPoly modp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    modp_rem(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = detail::invmod(a.back(), p);
    for (auto& c : a) c = detail::mulmod(c, inv, p);
  }
  return a;
}

ModPoly modp_derivative(const ModPoly& a, u64 p) {
  ModPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(detail::mulmod(a[i], i % p, p));
  trim(d);
  return d;
}

UPoly euclid_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Integer horner_mod(const std::vector<Integer>& h, const Integer& r, const Integer& m) {
  Integer acc = 0;
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    acc = acc * r + *it;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return acc;
}

// h(n/d) * d^deg == 0 over the integers.
bool is_root(const std::vector<Integer>& h, const Rational& x) {
  Integer acc = 0;
  Integer dpow = 1;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  // Horner on the homogenized form sum h_i n^i d^(deg-i).
  for (auto it = h.rbegin(); it != h.rend(); ++it) {
    acc = acc * n + *it * dpow;
    dpow *= d;
  }
  return acc == 0;
}

}  // namespace

bool rational_reconstruct(const Integer& a, const Integer& m, const Integer& num_bound,
                          const Integer& den_bound, Rational& out) {
  Integer r0 = m, r1;
  mpz_mod(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  Integer s0 = 0, s1 = 1;
  while (r1 > num_bound) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Integer n = r1, d = s1;
  if (d < 0) {
    d = -d;
    n = -n;
  }
  if (d == 0 || d > den_bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return false;
  Integer check = n - a * d;
  if (mpz_divisible_p(check.get_mpz_t(), m.get_mpz_t()) == 0) return false;
  out = Rational(n, d);
  return true;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UPoly::constant(1);

  const std::vector<Integer> A = primitive_integer_coeffs(a);
  const std::vector<Integer> B = primitive_integer_coeffs(b);
  int best = INT_MAX;
  std::vector<Integer> residues;
  Integer modulus = 1;
  std::size_t used = 0;
  for (std::size_t i = 0; i < detail::kPrimeCount; ++i) {
    const u64 p = detail::large_prime(i);
    if (detail::reduce(A.back(), p) == 0 || detail::reduce(B.back(), p) == 0) continue;
    const ModPoly g = modp_gcd(reduce(A, p), reduce(B, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return UPoly::constant(1);
    if (dg > best) continue;
    if (dg < best) {
      best = dg;
      residues.assign(g.size(), 0);
      for (std::size_t k = 0; k < g.size(); ++k) residues[k] = g[k];
      modulus = p;
      used = 1;
    } else {
      const u64 inv = detail::invmod(detail::reduce(modulus, p), p);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const u64 r = detail::reduce(residues[k], p);
        const u64 t = detail::mulmod(detail::submod(g[k], r, p), inv, p);
        residues[k] += modulus * static_cast<unsigned long>(t);
      }
      modulus *= static_cast<unsigned long>(p);
      ++used;
    }
    if ((used & (used - 1)) != 0) continue;  // try at 1, 2, 4, 8, ... primes
    Integer bound;
    mpz_tdiv_q_2exp(bound.get_mpz_t(), modulus.get_mpz_t(), 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    std::vector<Rational> coeffs(residues.size());
    bool ok = true;
    for (std::size_t k = 0; k < residues.size() && ok; ++k) {
      ok = rational_reconstruct(residues[k], modulus, bound, bound, coeffs[k]);
    }
    if (!ok) continue;
    UPoly candidate(std::move(coeffs));
    if (divmod(a, candidate).second.is_zero() && divmod(b, candidate).second.is_zero()) {
      return candidate;
    }
  }
  return euclid_gcd(a, b);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<Rational> roots;
  std::vector<Integer> h = primitive_integer_coeffs(squarefree_part(p));
  if (h.size() > 1 && h[0] == 0) {
    roots.emplace_back(0);
    h.erase(h.begin());
  }
  const int n = static_cast<int>(h.size()) - 1;
  if (n <= 0) return roots;

  const Integer num_bound = abs(h.front());
  const Integer den_bound = abs(h.back());
  const Integer lift_target = 2 * num_bound * den_bound;

  // A prime keeping h separable and its degree.
  mpz_class q = std::max(1009, 2 * n + 1);
  mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
  ModPoly hq;
  for (;; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
    const u64 pq = q.get_ui();
    hq = reduce(h, pq);
    if (static_cast<int>(hq.size()) - 1 != n) continue;
    if (modp_gcd(hq, modp_derivative(hq, pq), pq).size() == 1) break;
  }
  const u64 pq = q.get_ui();
  std::vector<Integer> dh(h.size() - 1);
  for (std::size_t i = 1; i < h.size(); ++i) dh[i - 1] = h[i] * static_cast<unsigned long>(i);

  for (u64 r = 0; r < pq; ++r) {
    u64 acc = 0;
    for (auto it = hq.rbegin(); it != hq.rend(); ++it) {
      acc = detail::addmod(detail::mulmod(acc, r, pq), *it, pq);
    }
    if (acc != 0) continue;
    Integer root = static_cast<unsigned long>(r);
    Integer m = q;
    while (m <= lift_target) {
      const Integer m2 = m * m;
      Integer inv;
      const Integer deriv = horner_mod(dh, root, m2);
      mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), m2.get_mpz_t());
      root -= horner_mod(h, root, m2) * inv;
      mpz_mod(root.get_mpz_t(), root.get_mpz_t(), m2.get_mpz_t());
      m = m2;
    }
    Rational candidate;
    if (rational_reconstruct(root, m, num_bound, den_bound, candidate) && is_root(h, candidate)) {
      roots.push_back(candidate);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace plc
