#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plc {

using Integer = mpz_class;
// Always canonical (lowest terms, positive denominator) after arithmetic.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "n" or "n/m".
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Least common multiple of the denominators (1 for an empty range).
Integer denominator_lcm(const std::vector<Rational>& values);

// Scales a vector to integer entries with content 1 and first nonzero entry
// positive. The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_vector(std::vector<Rational> v);

}  // namespace plc
