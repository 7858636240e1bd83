#include "plcurve/algebra/rational.hpp"

namespace plc {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

Integer denominator_lcm(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::vector<Rational> primitive_integer_vector(std::vector<Rational> v) {
  const Integer l = denominator_lcm(v);
  Integer g = 0;
  const Rational* first = nullptr;
  for (auto& e : v) {
    e *= l;
    if (e != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_num_mpz_t());
      if (first == nullptr) first = &e;
    }
  }
  if (first == nullptr) return v;
  if (*first < 0) g = -g;
  for (auto& e : v) {
    if (e != 0) e = Rational(e.get_num() / g);
  }
  return v;
}

}  // namespace plc
