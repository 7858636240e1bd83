#include "plcurve/algebra/gcd.hpp"

#include <algorithm>
#include <array>

#include "plcurve/algebra/bipoly.hpp"
#include "plcurve/algebra/upoly.hpp"
#include "plcurve/error.hpp"

namespace plc {
namespace {

int z_order(const HomPoly& f) {
  int e = f.degree();
  for (const auto& [m, c] : f.terms()) e = std::min(e, m.ez);
  return e;
}

HomPoly strip_z(const HomPoly& f, int e) {
  HomPoly::Terms terms;
  for (const auto& [m, c] : f.terms()) terms.emplace(Monomial{m.ex, m.ey, m.ez - e}, c);
  return HomPoly(f.degree() - e, std::move(terms));
}

HomPoly make_monic(const HomPoly& f) {
  if (f.is_zero()) return f;
  return f * (1 / f.leading_coefficient());
}

// f restricted to the line s*A + B, as a polynomial in s.
UPoly restrict_to_line(const HomPoly& f, const std::array<int, 3>& a, const std::array<int, 3>& b) {
  std::array<std::vector<UPoly>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    const UPoly lin({Rational(b[v]), Rational(a[v])});
    powers[v].push_back(UPoly::constant(1));
    for (int e = 1; e <= f.degree(); ++e) powers[v].push_back(powers[v].back() * lin);
  }
  UPoly out;
  for (const auto& [m, c] : f.terms()) out += powers[0][m.ex] * powers[1][m.ey] * powers[2][m.ez] * c;
  return out;
}

}  // namespace

HomPoly gcd(const HomPoly& a, const HomPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  const int ea = z_order(a);
  const int eb = z_order(b);
  const HomPoly sa = strip_z(a, ea);
  const HomPoly sb = strip_z(b, eb);
  const BiPoly g = gcd(dehomogenize(sa, Var::z), dehomogenize(sb, Var::z));
  HomPoly h = homogenize_z(g, g.total_degree());
  const int ez = std::min(ea, eb);
  if (ez > 0) h = h * HomPoly::monomial(Monomial{0, 0, ez});
  return make_monic(h);
}

bool squarefree_check_exact(const HomPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree check of the zero polynomial");
  if (f.degree() == 0) return true;
  HomPoly g = f;
  for (Var v : kVars) {
    g = gcd(g, partial(f, v));
    if (g.degree() == 0) return true;
  }
  return false;
}

bool squarefree_check(const HomPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "squarefree check of the zero polynomial");
  if (f.degree() <= 1) return true;
  // A repeated factor g^2 of f restricts to a repeated factor on every line
  // not contained in the curve, so one squarefree restriction is a proof.
  static constexpr std::array<std::array<std::array<int, 3>, 2>, 4> kLines{{
      {{{1, 2, 3}, {2, -1, 5}}},
      {{{1, -3, 7}, {-4, 5, 2}}},
      {{{3, 1, -2}, {1, 4, -1}}},
      {{{2, 5, 1}, {-3, 1, 6}}},
  }};
  for (const auto& line : kLines) {
    const UPoly p = restrict_to_line(f, line[0], line[1]);
    if (p.is_zero()) continue;
    // The point at s = infinity is A; a degree drop of two or more means A is
    // a multiple root of the binary form.
    if (p.degree() < f.degree() - 1) continue;
    if (gcd(p, p.derivative()).degree() == 0) return true;
  }
  return squarefree_check_exact(f);
}

}  // namespace plc
