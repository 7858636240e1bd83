#include "plcurve/topology.hpp"

#include <algorithm>
#include <numeric>

#include "plcurve/error.hpp"

namespace plc {

void SpectrumMultiset::add(const Rational& alpha, long mult) {
  if (mult < 0) throw Error(ErrorKind::InvalidArgument, "negative spectrum multiplicity");
  if (mult == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), alpha,
                             [](const SpectrumEntry& e, const Rational& a) { return e.alpha < a; });
  if (it != entries_.end() && it->alpha == alpha) {
    it->mult += mult;
  } else {
    entries_.insert(it, SpectrumEntry{alpha, mult});
  }
}

long SpectrumMultiset::mult(const Rational& alpha) const {
  for (const auto& e : entries_) {
    if (e.alpha == alpha) return e.mult;
  }
  return 0;
}

long SpectrumMultiset::total() const {
  long s = 0;
  for (const auto& e : entries_) s += e.mult;
  return s;
}

std::string to_string(const SpectrumMultiset& sp) {
  std::string out;
  for (const auto& e : sp.entries()) {
    if (!out.empty()) out += ' ';
    out += to_string(e.alpha) + ":" + std::to_string(e.mult);
  }
  return out.empty() ? "{}" : out;
}

void CycloPoly::multiply(int n, long mult) {
  if (n < 1 || mult < 0) throw Error(ErrorKind::InvalidArgument, "bad cyclotomic factor");
  if (mult == 0) return;
  factors_[n] += mult;
}

long CycloPoly::mult(int n) const {
  auto it = factors_.find(n);
  return it == factors_.end() ? 0 : it->second;
}

long CycloPoly::degree() const {
  long deg = 0;
  for (const auto& [n, m] : factors_) deg += m * euler_phi(n);
  return deg;
}

long euler_phi(int n) {
  long count = 0;
  for (int k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

namespace {

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic integer polynomial.
std::vector<Integer> poly_div_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<Integer> q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::vector<Integer> cyclotomic(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[n] = 1;
  for (int k = 1; k < n; ++k) {
    if (n % k == 0) p = poly_div_monic(std::move(p), cyclotomic(k));
  }
  return p;
}

std::vector<Integer> CycloPoly::expand() const {
  std::vector<Integer> out{Integer(1)};
  for (const auto& [n, m] : factors_) {
    const auto phi = cyclotomic(n);
    for (long i = 0; i < m; ++i) out = poly_mul(out, phi);
  }
  return out;
}

std::string to_string(const CycloPoly& p) {
  if (p.factors().empty()) return "1";
  std::string out;
  for (const auto& [n, m] : p.factors()) {
    if (!out.empty()) out += '*';
    out += "Phi" + std::to_string(n);
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out;
}

SpectrumMultiset spectrum(const std::vector<long>& njs, int d, long b1) {
  const std::size_t expected = d >= 3 ? static_cast<std::size_t>(d - 3) : 0;
  if (njs.size() != expected) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(expected) +
                                                " values n_1..n_{d-3}, got " +
                                                std::to_string(njs.size()));
  }
  SpectrumMultiset sp;
  for (int j = 3; j <= d - 1; ++j) {
    const long n = njs[j - 3];
    sp.add(1 + make_rational(j, d), n);
    sp.add(3 - make_rational(j, d), n);
  }
  sp.add(2, b1);
  return sp;
}

EigenvalueTable eigenvalue_table(const SpectrumMultiset& sp, int d) {
  if (d < 1) throw Error(ErrorKind::BadDegree, "degree must be positive");
  EigenvalueTable tab{d, std::vector<long>(static_cast<std::size_t>(d), 0)};
  for (const auto& e : sp.entries()) {
    const Rational scaled = e.alpha * d;
    if (!is_integer(scaled) || e.alpha <= 1 || e.alpha >= 3) {
      throw Error(ErrorKind::BadExponent, "exponent " + to_string(e.alpha) +
                                              " is not of the form 1+j/d, 3-j/d or 2 for d = " +
                                              std::to_string(d));
    }
    // exp(-2 pi i alpha) = exp(-2 pi i k / d) with k = alpha * d mod d.
    const long k = mpz_fdiv_ui(scaled.get_num_mpz_t(), static_cast<unsigned long>(d));
    tab.mults[k] += e.mult;
  }
  return tab;
}

CycloPoly alexander(const EigenvalueTable& tab) {
  const int d = tab.d;
  if (static_cast<int>(tab.mults.size()) != d) {
    throw Error(ErrorKind::InvalidArgument, "eigenvalue table has the wrong length");
  }
  CycloPoly out;
  std::map<int, long> orbit_mult;
  for (int k = 0; k < d; ++k) {
    const int g = std::gcd(k, d);  // gcd(0, d) = d
    const int n = d / g;
    auto [it, inserted] = orbit_mult.emplace(n, tab.mults[k]);
    if (!inserted && it->second != tab.mults[k]) {
      throw Error(ErrorKind::OrbitInconsistency,
                  "eigenvalues of order " + std::to_string(n) + " have multiplicities " +
                      std::to_string(it->second) + " and " + std::to_string(tab.mults[k]));
    }
  }
  for (const auto& [n, m] : orbit_mult) out.multiply(n, m);
  return out;
}

CycloPoly delta2(const CycloPoly& alex, long chi, int d) {
  std::map<int, long> exps;
  for (int n = 1; n <= d; ++n) {
    if (d % n == 0) exps[n] = chi;
  }
  for (const auto& [n, m] : alex.factors()) exps[n] += m;
  exps[1] -= 1;
  CycloPoly out;
  for (const auto& [n, e] : exps) {
    if (e < 0) {
      throw Error(ErrorKind::NotPolynomial, "Phi" + std::to_string(n) + " would get exponent " +
                                                std::to_string(e));
    }
    out.multiply(n, e);
  }
  return out;
}

std::pair<long, long> milnor_fiber_betti(const CycloPoly& alex, long chi, int d) {
  const long b1 = alex.degree();
  const long b2 = static_cast<long>(d) * chi - 1 + b1;
  if (b2 < 0) {
    throw Error(ErrorKind::NegativeBetti, "b2(F) = " + std::to_string(b2));
  }
  return {b1, b2};
}

}  // namespace plc
