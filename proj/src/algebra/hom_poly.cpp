#include "plcurve/algebra/hom_poly.hpp"

#include <sstream>

#include "plcurve/error.hpp"

namespace plc {

char var_name(Var v) noexcept {
  switch (v) {
    case Var::x: return 'x';
    case Var::y: return 'y';
    case Var::z: return 'z';
  }
  return '?';
}

std::vector<Monomial> monomial_basis(int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  out.reserve(dim_S(k));
  for (int a = k; a >= 0; --a) {
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  }
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  auto emit = [&](char name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  emit('x', m.ex);
  emit('y', m.ey);
  emit('z', m.ez);
  return out.empty() ? "1" : out;
}

HomPoly::HomPoly(int degree) : degree_(degree) {}

HomPoly::HomPoly(int degree, Terms terms) : degree_(degree) {
  for (auto& [m, c] : terms) {
    if (c == 0) continue;
    if (m.degree() != degree) {
      throw Error(ErrorKind::NotHomogeneous,
                  "monomial " + to_string(m) + " has degree " +
                      std::to_string(m.degree()) + ", expected " +
                      std::to_string(degree));
    }
    terms_.emplace(m, std::move(c));
  }
}

HomPoly HomPoly::constant(const Rational& c) {
  HomPoly p(0);
  if (c != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

HomPoly HomPoly::monomial(const Monomial& m, const Rational& c) {
  HomPoly p(m.degree());
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

HomPoly HomPoly::variable(Var v) { return monomial(Monomial::of(v)); }

Rational HomPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational HomPoly::evaluate(const Rational& x, const Rational& y,
                           const Rational& z) const {
  Rational acc = 0;
  Rational px, py, pz;
  for (const auto& [m, c] : terms_) {
    mpz_pow_ui(px.get_num_mpz_t(), x.get_num_mpz_t(), m.ex);
    mpz_pow_ui(px.get_den_mpz_t(), x.get_den_mpz_t(), m.ex);
    mpz_pow_ui(py.get_num_mpz_t(), y.get_num_mpz_t(), m.ey);
    mpz_pow_ui(py.get_den_mpz_t(), y.get_den_mpz_t(), m.ey);
    mpz_pow_ui(pz.get_num_mpz_t(), z.get_num_mpz_t(), m.ez);
    mpz_pow_ui(pz.get_den_mpz_t(), z.get_den_mpz_t(), m.ez);
    acc += c * px * py * pz;
  }
  return acc;
}

HomPoly HomPoly::pow(unsigned e) const {
  HomPoly result = constant(1);
  HomPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

void HomPoly::add_scaled(const HomPoly& o, const Rational& scale) {
  if (o.degree_ != degree_) {
    // The zero polynomial of a different degree is still a degree error:
    // graded slices must not mix.
    throw Error(ErrorKind::DegreeMismatch,
                "cannot add polynomials of degrees " + std::to_string(degree_) +
                    " and " + std::to_string(o.degree_));
  }
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second += scale * c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  add_scaled(o, 1);
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  add_scaled(o, -1);
  return *this;
}

HomPoly& HomPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  HomPoly out(a.degree_ + b.degree_);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, 0);
      it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

HomPoly partial(const HomPoly& f, Var v) {
  HomPoly::Terms terms;
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    terms.emplace(m / Monomial::of(v), c * e);
  }
  return HomPoly(f.degree() > 0 ? f.degree() - 1 : 0, std::move(terms));
}

std::optional<HomPoly> divide_exact(const HomPoly& num, const HomPoly& den) {
  if (den.is_zero()) return std::nullopt;
  const int qdeg = num.degree() - den.degree();
  if (num.is_zero()) {
    if (qdeg < 0) return std::nullopt;
    return HomPoly(qdeg);
  }
  if (qdeg < 0) return std::nullopt;
  HomPoly rem = num;
  HomPoly quot(qdeg);
  const Monomial& lm = den.leading_monomial();
  const Rational& lc = den.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    HomPoly step = HomPoly::monomial(rm / lm, rem.leading_coefficient() / lc);
    rem -= step * den;
    quot += step;
  }
  return quot;
}

std::string to_string(const HomPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit_monomial = m.degree() == 0;
    if (unit_monomial) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << '*';
      out << to_string(m);
    }
  }
  return out.str();
}

HomPoly primitive_part(const HomPoly& f) {
  if (f.is_zero()) return f;
  Integer l = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer g = 0;
  for (const auto& [m, c] : f.terms()) {
    Integer n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (f.leading_coefficient() < 0) scale = -scale;
  return f * scale;
}

}  // namespace plc
