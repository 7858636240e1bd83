#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plcurve/algebra/rational.hpp"

namespace plc {

struct SpectrumEntry {
  Rational alpha;
  long mult = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Multiset of spectral exponents, sorted by alpha, zero multiplicities dropped.
class SpectrumMultiset {
 public:
  void add(const Rational& alpha, long mult);
  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  long mult(const Rational& alpha) const;
  long total() const;
  friend bool operator==(const SpectrumMultiset&, const SpectrumMultiset&) = default;

 private:
  std::vector<SpectrumEntry> entries_;
};

// "3/2:1 5/3:1 2:2"
std::string to_string(const SpectrumMultiset& sp);

// Product of cyclotomic polynomials Phi_n^mult.
class CycloPoly {
 public:
  CycloPoly() = default;
  // Throws InvalidArgument for n < 1 or mult < 0.
  void multiply(int n, long mult);
  long mult(int n) const;
  const std::map<int, long>& factors() const noexcept { return factors_; }
  long degree() const;
  // Integer coefficients from t^0 upwards.
  std::vector<Integer> expand() const;
  friend bool operator==(const CycloPoly&, const CycloPoly&) = default;

 private:
  std::map<int, long> factors_;  // only positive multiplicities
};

// "Phi1^2*Phi6", "1" for the constant polynomial.
std::string to_string(const CycloPoly& p);

long euler_phi(int n);
std::vector<Integer> cyclotomic(int n);

// mults[k] is the multiplicity of exp(-2 pi i k / d).
struct EigenvalueTable {
  int d = 1;
  std::vector<long> mults;
  friend bool operator==(const EigenvalueTable&, const EigenvalueTable&) = default;
};

// Sp^1 from n_1..n_{d-3} (njs[0] = n_1) and b1 of the complement.
SpectrumMultiset spectrum(const std::vector<long>& njs, int d, long b1);

// BadExponent unless every alpha lies in (1, 3) with alpha * d an integer.
EigenvalueTable eigenvalue_table(const SpectrumMultiset& sp, int d);

// OrbitInconsistency when multiplicities differ inside a Galois orbit.
CycloPoly alexander(const EigenvalueTable& tab);

// (t^d - 1)^chi * alex / (t - 1) in factored form; NotPolynomial when an
// exponent goes negative.
CycloPoly delta2(const CycloPoly& alex, long chi, int d);

// (b1(F), b2(F)) with b2 from chi(F) = d * chi; NegativeBetti if b2 < 0.
std::pair<long, long> milnor_fiber_betti(const CycloPoly& alex, long chi, int d);

}  // namespace plc
