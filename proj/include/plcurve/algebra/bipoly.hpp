#pragma once

#include <optional>
#include <vector>

#include "plcurve/algebra/hom_poly.hpp"
#include "plcurve/algebra/upoly.hpp"

namespace plc {

// Polynomial in two affine coordinates (u, v) over Q, stored as a polynomial
// in v whose coefficients are polynomials in u.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UPoly> coeffs_in_v);

  static BiPoly constant(const Rational& c);
  static BiPoly u();
  static BiPoly v();
  static BiPoly monomial(int i, int j, const Rational& c);  // c u^i v^j
  static BiPoly from_u(const UPoly& p);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree_v() const noexcept { return static_cast<int>(c_.size()) - 1; }
  int degree_u() const;
  int total_degree() const;  // -1 for zero
  const std::vector<UPoly>& coeffs_v() const noexcept { return c_; }
  Rational coefficient(int i, int j) const;

  BiPoly partial_u() const;
  BiPoly partial_v() const;
  // Polynomial in v obtained by fixing u.
  UPoly at_u(const Rational& u0) const;
  // Polynomial in u obtained by fixing v.
  UPoly at_v(const Rational& v0) const;
  Rational evaluate(const Rational& u0, const Rational& v0) const;
  BiPoly pow(unsigned e) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void trim();
  std::vector<UPoly> c_;
};

// g(U, V).
BiPoly compose(const BiPoly& g, const BiPoly& U, const BiPoly& V);

// Res_v(p, q) as a polynomial in u, computed by evaluation at integer points
// and interpolation. Zero when p and q share a factor involving v.
UPoly resultant_v(const BiPoly& p, const BiPoly& q);

// gcd over Q[u, v] by the primitive polynomial remainder sequence in v, with
// the leading coefficient made monic in u.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// Quotient q with a = q * b, or nullopt.
std::optional<BiPoly> divide_exact(const BiPoly& a, const BiPoly& b);

// Affine chart where `fixed` = 1; the two remaining variables, in x, y, z
// order, become (u, v).
BiPoly dehomogenize(const HomPoly& f, Var fixed);

// Inverse of dehomogenize at z = 1: u -> x, v -> y, padded with z to `degree`.
HomPoly homogenize_z(const BiPoly& g, int degree);

}  // namespace plc
