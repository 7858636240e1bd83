#pragma once

#include <utility>
#include <vector>

#include "plcurve/algebra/rational.hpp"

namespace plc {

// Dense univariate polynomial over Q, coefficients from degree 0 upwards with
// no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  // The polynomial t.
  static UPoly identity();

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
  const Rational& lc() const { return c_.back(); }

  Rational evaluate(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;
  // Vanishing order at t = 0; -1 for the zero polynomial.
  int order_at_zero() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws InvalidArgument for a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

UPoly squarefree_part(const UPoly& p);

// Integer coefficients with content 1 and positive leading coefficient.
std::vector<Integer> primitive_integer_coeffs(const UPoly& p);

// Distinct rational roots in increasing order. Roots are located modulo a
// prime, Hensel-lifted and recovered by rational reconstruction; every
// candidate is checked exactly.
std::vector<Rational> rational_roots(const UPoly& p);

// Rational reconstruction of a mod m: n/d with |n| <= num_bound,
// 0 < d <= den_bound, or false.
bool rational_reconstruct(const Integer& a, const Integer& m, const Integer& num_bound,
                          const Integer& den_bound, Rational& out);

}  // namespace plc
