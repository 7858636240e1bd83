#pragma once

#include <map>
#include <optional>
#include <string>

#include "plcurve/algebra/monomial.hpp"
#include "plcurve/algebra/rational.hpp"

namespace plc {

// Homogeneous polynomial in x, y, z with rational coefficients.
//
// Every stored monomial has total degree degree(); zero coefficients are never
// stored. The zero polynomial keeps its degree so that graded slices stay
// typed.
class HomPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  explicit HomPoly(int degree = 0);

  // Throws NotHomogeneous if a monomial has the wrong degree. Zero
  // coefficients are dropped.
  HomPoly(int degree, Terms terms);

  static HomPoly constant(const Rational& c);
  static HomPoly monomial(const Monomial& m, const Rational& c = 1);
  static HomPoly variable(Var v);

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  // Undefined for the zero polynomial.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Rational evaluate(const Rational& x, const Rational& y, const Rational& z) const;

  HomPoly pow(unsigned e) const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Rational& c);

  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator*(HomPoly a, const Rational& c) { return a *= c; }
  friend HomPoly operator*(const Rational& c, HomPoly a) { return a *= c; }
  friend HomPoly operator-(HomPoly a) { return a *= Rational(-1); }

  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void add_scaled(const HomPoly& o, const Rational& scale);

  int degree_;
  Terms terms_;
};

// Named forms of the ring operations.
inline HomPoly add(const HomPoly& a, const HomPoly& b) { return a + b; }
inline HomPoly sub(const HomPoly& a, const HomPoly& b) { return a - b; }
inline HomPoly mul(const HomPoly& a, const HomPoly& b) { return a * b; }
inline HomPoly scalar_mul(const Rational& c, const HomPoly& a) { return c * a; }

// d f / d v; the zero polynomial of degree deg f - 1 when f does not involve v.
// For constants the result is the zero polynomial of degree 0.
HomPoly partial(const HomPoly& f, Var v);

// Quotient q with num = q * den, or nullopt when den does not divide num.
std::optional<HomPoly> divide_exact(const HomPoly& num, const HomPoly& den);

// Canonical text: terms in decreasing grlex order, e.g.
// "x^4 + x^2*z^2 + 2*x*y^2*z + y^4". The zero polynomial prints as "0".
std::string to_string(const HomPoly& f);

// Multiplies by the lcm of denominators and divides by the content, making the
// leading coefficient positive.
HomPoly primitive_part(const HomPoly& f);

}  // namespace plc
