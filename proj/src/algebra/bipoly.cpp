#include "plcurve/algebra/bipoly.hpp"

#include <algorithm>

#include "plcurve/error.hpp"

namespace plc {

BiPoly::BiPoly(std::vector<UPoly> coeffs_in_v) : c_(std::move(coeffs_in_v)) { trim(); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const Rational& c) { return BiPoly({UPoly::constant(c)}); }
BiPoly BiPoly::u() { return BiPoly({UPoly::identity()}); }
BiPoly BiPoly::v() { return BiPoly({UPoly(), UPoly::constant(1)}); }
BiPoly BiPoly::from_u(const UPoly& p) { return BiPoly({p}); }

BiPoly BiPoly::monomial(int i, int j, const Rational& c) {
  std::vector<Rational> uc(static_cast<std::size_t>(i) + 1);
  uc[i] = c;
  std::vector<UPoly> vc(static_cast<std::size_t>(j) + 1);
  vc[j] = UPoly(std::move(uc));
  return BiPoly(std::move(vc));
}

int BiPoly::degree_u() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
  }
  return d;
}

Rational BiPoly::coefficient(int i, int j) const {
  if (j < 0 || j > degree_v()) return 0;
  return c_[j].coeff(i);
}

BiPoly BiPoly::partial_u() const {
  std::vector<UPoly> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.derivative());
  return BiPoly(std::move(out));
}

BiPoly BiPoly::partial_v() const {
  std::vector<UPoly> out;
  for (std::size_t j = 1; j < c_.size(); ++j) out.push_back(c_[j] * Rational(static_cast<long>(j)));
  return BiPoly(std::move(out));
}

UPoly BiPoly::at_u(const Rational& u0) const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.evaluate(u0));
  return UPoly(std::move(out));
}

UPoly BiPoly::at_v(const Rational& v0) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * UPoly::constant(v0) + *it;
  return acc;
}

Rational BiPoly::evaluate(const Rational& u0, const Rational& v0) const {
  return at_u(u0).evaluate(v0);
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(1);
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly compose(const BiPoly& g, const BiPoly& U, const BiPoly& V) {
  const int du = g.degree_u();
  std::vector<BiPoly> upow{BiPoly::constant(1)};
  for (int i = 1; i <= du; ++i) upow.push_back(upow.back() * U);
  BiPoly acc;
  // Horner in v over coefficients expanded in powers of U.
  for (auto it = g.coeffs_v().rbegin(); it != g.coeffs_v().rend(); ++it) {
    BiPoly coeff;
    for (int i = 0; i <= it->degree(); ++i) {
      if (it->coeff(i) != 0) coeff += upow[i] * it->coeff(i);
    }
    acc = acc * V + coeff;
  }
  return acc;
}

namespace {

// Determinant of an n x n integer matrix by fraction-free elimination.
Integer bareiss_det(std::vector<Integer> a, std::size_t n) {
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      sign = -sign;
    }
    const Integer& akk = a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer aik = a[i * n + k];
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& aij = a[i * n + j];
        aij = akk * aij - aik * a[k * n + j];
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * n + k] = 0;
    }
    prev = akk;
  }
  Integer det = a[n * n - 1];
  return sign > 0 ? det : Integer(-det);
}

// Integer coefficients of p scaled by `scale`, as polynomials in u per power of v.
std::vector<std::vector<Integer>> integer_coeffs(const BiPoly& p, const Integer& scale) {
  std::vector<std::vector<Integer>> out;
  for (const auto& c : p.coeffs_v()) {
    std::vector<Integer> row;
    for (const auto& r : c.coeffs()) {
      Rational s = r * scale;
      row.push_back(s.get_num());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Integer common_denominator(const BiPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs_v()) {
    for (const auto& r : c.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  }
  return l;
}

Integer eval_int(const std::vector<Integer>& coeffs, long t) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly interpolate(const std::vector<long>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / Rational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  UPoly acc = UPoly::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = acc * UPoly({Rational(-xs[i]), Rational(1)}) + UPoly::constant(ys[i]);
  }
  return acc;
}

UPoly upow(const UPoly& p, int e) {
  UPoly r = UPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace

UPoly resultant_v(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const int m = p.degree_v();
  const int n = q.degree_v();
  if (m == 0) return upow(p.coeffs_v()[0], n);
  if (n == 0) return upow(q.coeffs_v()[0], m);

  const Integer lp = common_denominator(p);
  const Integer lq = common_denominator(q);
  const auto P = integer_coeffs(p, lp);
  const auto Q = integer_coeffs(q, lq);

  const int crude = n * std::max(p.degree_u(), 0) + m * std::max(q.degree_u(), 0);
  const int bezout = p.total_degree() * q.total_degree();
  const int bound = std::min(crude, bezout);

  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<long> xs;
  std::vector<Rational> ys;
  for (int k = 0; k <= bound; ++k) {
    const long t = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    xs.push_back(t);
    std::vector<Integer> pv(static_cast<std::size_t>(m) + 1), qv(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= m; ++j) pv[j] = eval_int(P[j], t);
    for (int j = 0; j <= n; ++j) qv[j] = eval_int(Q[j], t);
    std::vector<Integer> syl(size * size);
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j <= m; ++j) syl[r * size + r + j] = pv[m - j];
    }
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j <= n; ++j) syl[(n + r) * size + r + j] = qv[n - j];
    }
    ys.emplace_back(bareiss_det(std::move(syl), size));
  }
  UPoly res = interpolate(xs, std::move(ys));
  // Res(lp p, lq q) = lp^n lq^m Res(p, q).
  Integer scale_num, lpn, lqm;
  mpz_pow_ui(lpn.get_mpz_t(), lp.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(lqm.get_mpz_t(), lq.get_mpz_t(), static_cast<unsigned long>(m));
  scale_num = lpn * lqm;
  return res * Rational(Integer(1), scale_num);
}

namespace {

UPoly content_v(const BiPoly& a) {
  UPoly g;
  for (const auto& c : a.coeffs_v()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly divide_coeffs(const BiPoly& a, const UPoly& d) {
  std::vector<UPoly> out;
  for (const auto& c : a.coeffs_v()) out.push_back(divmod(c, d).first);
  return BiPoly(std::move(out));
}

BiPoly pseudo_remainder(BiPoly r, const BiPoly& b) {
  const int db = b.degree_v();
  const BiPoly lcb = BiPoly::from_u(b.coeffs_v().back());
  while (!r.is_zero() && r.degree_v() >= db) {
    const int shift = r.degree_v() - db;
    std::vector<UPoly> mono(static_cast<std::size_t>(shift) + 1);
    mono[shift] = r.coeffs_v().back();
    r = r * lcb - BiPoly(std::move(mono)) * b;
  }
  return r;
}

BiPoly normalize(const BiPoly& a) {
  if (a.is_zero()) return a;
  return a * (1 / a.coeffs_v().back().lc());
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const UPoly ca = content_v(a);
  const UPoly cb = content_v(b);
  BiPoly pa = divide_coeffs(a, ca);
  BiPoly pb = divide_coeffs(b, cb);
  const BiPoly content = BiPoly::from_u(gcd(ca, cb));
  if (pa.degree_v() < pb.degree_v()) std::swap(pa, pb);
  while (pb.degree_v() > 0) {
    BiPoly r = pseudo_remainder(pa, pb);
    if (r.is_zero()) break;
    pa = std::move(pb);
    pb = divide_coeffs(r, content_v(r));
  }
  if (pb.degree_v() <= 0) return normalize(content);
  return normalize(content * pb);
}

std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  BiPoly r = a;
  std::vector<UPoly> q(static_cast<std::size_t>(std::max(a.degree_v() - b.degree_v() + 1, 0)));
  const UPoly& lcb = b.coeffs_v().back();
  while (!r.is_zero()) {
    const int shift = r.degree_v() - b.degree_v();
    if (shift < 0) return std::nullopt;
    auto [c, rem] = divmod(r.coeffs_v().back(), lcb);
    if (!rem.is_zero()) return std::nullopt;
    std::vector<UPoly> mono(static_cast<std::size_t>(shift) + 1);
    mono[shift] = c;
    q[shift] += c;
    r -= BiPoly(std::move(mono)) * b;
  }
  return BiPoly(std::move(q));
}

BiPoly dehomogenize(const HomPoly& f, Var fixed) {
  BiPoly out;
  for (const auto& [m, c] : f.terms()) {
    int i = 0, j = 0;
    switch (fixed) {
      case Var::x: i = m.ey; j = m.ez; break;
      case Var::y: i = m.ex; j = m.ez; break;
      case Var::z: i = m.ex; j = m.ey; break;
    }
    out += BiPoly::monomial(i, j, c);
  }
  return out;
}

HomPoly homogenize_z(const BiPoly& g, int degree) {
  HomPoly::Terms terms;
  const auto& cv = g.coeffs_v();
  for (std::size_t j = 0; j < cv.size(); ++j) {
    for (int i = 0; i <= cv[j].degree(); ++i) {
      if (cv[j].coeff(i) == 0) continue;
      const int ez = degree - i - static_cast<int>(j);
      if (ez < 0) throw Error(ErrorKind::InvalidArgument, "homogenizing degree too small");
      terms.emplace(Monomial{i, static_cast<int>(j), ez}, cv[j].coeff(i));
    }
  }
  return HomPoly(degree, std::move(terms));
}

}  // namespace plc
