#include "plcurve/invariants.hpp"

#include <algorithm>

#include "plcurve/algebra/bipoly.hpp"
#include "plcurve/algebra/upoly.hpp"
#include "plcurve/error.hpp"

namespace plc {

std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Free: return "Free";
    case ClassKind::NearlyFree: return "NearlyFree";
    case ClassKind::Neither: return "Neither";
    case ClassKind::LinePencil: return "LinePencil";
  }
  return "?";
}

std::string to_string(const Classification& c) {
  std::string out = to_string(c.kind);
  if (c.d1 && c.d2) out += "(" + std::to_string(*c.d1) + "," + std::to_string(*c.d2) + ")";
  return out;
}

std::string to_string(const Point& p) {
  return "(" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + ")";
}

std::size_t hilbert_jacobian(const Curve& curve, int k) {
  if (k < 0) return 0;
  const int r = k - curve.degree() + 1;
  if (r < 0) return dim_S(k);
  return dim_S(k) - rank(jacobian_map_matrix(curve, r));
}

std::size_t hilbert_jacobian(const HomPoly& f, int k) { return hilbert_jacobian(Curve(f), k); }

std::size_t tjurina_total(const Curve& curve) {
  const int d = curve.degree();
  if (d <= 1) return 0;
  const std::size_t h0 = hilbert_jacobian(curve, 3 * d - 6);
  const std::size_t h1 = hilbert_jacobian(curve, 3 * d - 5);
  const std::size_t h2 = hilbert_jacobian(curve, 3 * d - 4);
  if (h1 == 0 && h2 == 0) return 0;
  if (h0 == h1 && h1 == h2) return h0;
  throw Error(ErrorKind::NotStabilized, "Hilbert function of S/J at degrees " +
                                            std::to_string(3 * d - 6) + ".." +
                                            std::to_string(3 * d - 4) + " is " +
                                            std::to_string(h0) + ", " + std::to_string(h1) +
                                            ", " + std::to_string(h2));
}

std::size_t tjurina_total(const HomPoly& f) { return tjurina_total(Curve(f)); }

Point normalize_point(const Point& p) {
  const std::vector<Rational> v = primitive_integer_vector({p[0], p[1], p[2]});
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
    throw Error(ErrorKind::InvalidArgument, "(0, 0, 0) is not a projective point");
  }
  return {v[0], v[1], v[2]};
}

namespace {

UPoly divide_out_roots(UPoly g, const std::vector<Rational>& roots) {
  for (const auto& r : roots) g = divmod(g, UPoly({-r, Rational(1)})).first;
  return g;
}

struct AffineSearch {
  std::vector<std::pair<Rational, Rational>> points;
  std::vector<std::string> unresolved;
};

// Common zeros of A, B, C in the affine plane. Candidate u-coordinates are the
// common roots of resultants of pairs from the span of A, B, C; extra pairs are
// only tried while a factor without rational roots survives.
AffineSearch affine_common_zeros(const BiPoly& A, const BiPoly& B, const BiPoly& C) {
  static constexpr int kCombos[][6] = {
      {1, 0, 0, 0, 1, 0},  {1, 0, 0, 0, 0, 1},  {0, 1, 0, 0, 0, 1}, {1, 2, 3, 0, 1, -1},
      {2, -1, 1, 1, 3, -2}, {1, -3, 2, 3, 1, 1}, {3, 1, -1, 1, -2, 5}, {1, 1, 1, 2, -1, 3},
  };
  AffineSearch out;
  UPoly G;
  bool have = false;
  std::vector<Rational> roots;
  UPoly residue;
  for (const auto& c : kCombos) {
    const BiPoly P = A * Rational(c[0]) + B * Rational(c[1]) + C * Rational(c[2]);
    const BiPoly Q = A * Rational(c[3]) + B * Rational(c[4]) + C * Rational(c[5]);
    if (P.is_zero() || Q.is_zero()) continue;
    const UPoly R = resultant_v(P, Q);
    if (R.is_zero()) continue;
    const UPoly Rs = squarefree_part(R);
    G = have ? gcd(G, Rs) : Rs;
    have = true;
    if (G.degree() <= 0) return out;
    roots = rational_roots(G);
    residue = divide_out_roots(G, roots);
    if (residue.degree() <= 0) break;
  }
  if (!have) {
    out.unresolved.push_back("all resultants of the partial derivatives vanish");
    return out;
  }
  if (residue.degree() > 0) {
    out.unresolved.push_back("x-coordinates from a factor of degree " +
                             std::to_string(residue.degree()) + " without rational roots");
  }
  for (const auto& u0 : roots) {
    const UPoly h = gcd(gcd(A.at_u(u0), B.at_u(u0)), C.at_u(u0));
    if (h.is_zero()) {
      out.unresolved.push_back("partials vanish on the whole line x = " + to_string(u0));
      continue;
    }
    if (h.degree() <= 0) continue;
    const auto vroots = rational_roots(h);
    for (const auto& v0 : vroots) out.points.emplace_back(u0, v0);
    if (static_cast<int>(vroots.size()) < squarefree_part(h).degree()) {
      out.unresolved.push_back("irrational y-coordinates over x = " + to_string(u0));
    }
  }
  return out;
}

bool is_singular_at(const Curve& curve, const Point& p) {
  for (const auto& g : curve.gradient()) {
    if (g.evaluate(p[0], p[1], p[2]) != 0) return false;
  }
  return true;
}

}  // namespace

SingularLocus singular_points(const Curve& curve) {
  SingularLocus locus;
  if (curve.degree() <= 1) return locus;
  std::vector<Point> pts;
  const auto& g = curve.gradient();

  // Chart z = 1.
  const AffineSearch aff = affine_common_zeros(dehomogenize(g[0], Var::z), dehomogenize(g[1], Var::z),
                                               dehomogenize(g[2], Var::z));
  for (const auto& [u, v] : aff.points) pts.push_back({u, v, Rational(1)});
  for (const auto& note : aff.unresolved) locus.unresolved.push_back("chart z=1: " + note);

  // Line z = 0 with y = 1: points (x : 1 : 0).
  UPoly h;
  for (const auto& gi : g) h = gcd(h, dehomogenize(gi, Var::y).at_v(0));
  if (h.is_zero()) {
    locus.unresolved.push_back("line z=0: all partials vanish identically");
  } else if (h.degree() > 0) {
    const auto roots = rational_roots(h);
    for (const auto& x0 : roots) pts.push_back({x0, Rational(1), Rational(0)});
    if (static_cast<int>(roots.size()) < squarefree_part(h).degree()) {
      locus.unresolved.push_back("line z=0: irrational x-coordinates");
    }
  }

  // The point (1 : 0 : 0).
  const Point e1{Rational(1), Rational(0), Rational(0)};
  if (is_singular_at(curve, e1)) pts.push_back(e1);

  for (const auto& p : pts) {
    if (!is_singular_at(curve, p)) {
      throw Error(ErrorKind::VerificationFailure, "candidate " + to_string(p) + " is not singular");
    }
    locus.points.push_back({normalize_point(p), std::nullopt});
  }
  std::sort(locus.points.begin(), locus.points.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return a.coords < b.coords; });
  locus.complete = locus.unresolved.empty();
  return locus;
}

SingularLocus singular_points(const HomPoly& f) { return singular_points(Curve(f)); }

int milnor_local(const Curve& curve, const Point& p) {
  const Point q = normalize_point(p);
  if (curve.f().evaluate(q[0], q[1], q[2]) != 0 || !is_singular_at(curve, q)) {
    throw Error(ErrorKind::NotSingular, to_string(q) + " is not a singular point of the curve");
  }
  // Chart: the last nonzero coordinate among z, y, x is set to 1.
  Var chart = Var::z;
  if (q[2] == 0) chart = q[1] != 0 ? Var::y : Var::x;
  const Rational& s = q[static_cast<int>(chart)];
  Rational u0, v0;
  switch (chart) {
    case Var::z: u0 = q[0] / s; v0 = q[1] / s; break;
    case Var::y: u0 = q[0] / s; v0 = q[2] / s; break;
    case Var::x: u0 = q[1] / s; v0 = q[2] / s; break;
  }
  const BiPoly u = BiPoly::u();
  const BiPoly v = BiPoly::v();
  const BiPoly g = compose(dehomogenize(curve.f(), chart), u + BiPoly::constant(u0),
                           v + BiPoly::constant(v0));
  BiPoly gu = g.partial_u();
  BiPoly gv = g.partial_v();
  // A common factor away from the origin does not change the local
  // intersection number; one through the origin means a non-isolated point.
  const BiPoly common = gcd(gu, gv);
  if (common.total_degree() > 0) {
    if (common.evaluate(0, 0) == 0) {
      throw Error(ErrorKind::NonIsolated, "partials share a component through " + to_string(q));
    }
    gu = *divide_exact(gu, common);
    gv = *divide_exact(gv, common);
  }

  std::vector<int> seen;
  int zero_run = 0;
  for (int t = 1;; ++t) {
    const BiPoly U = u + v * Rational(t);
    const UPoly R = resultant_v(compose(gu, U, v), compose(gv, U, v));
    if (R.is_zero()) {
      if (++zero_run == 5) {
        throw Error(ErrorKind::NonIsolated, "resultant vanishes for five consecutive shears at " +
                                                to_string(q));
      }
      continue;
    }
    zero_run = 0;
    const int ord = R.order_at_zero();
    const bool agrees = std::find(seen.begin(), seen.end(), ord) != seen.end();
    seen.push_back(ord);
    if (agrees) break;
  }
  return *std::min_element(seen.begin(), seen.end());
}

int milnor_local(const HomPoly& f, const Point& p) { return milnor_local(Curve(f), p); }

long milnor_total(const Curve& curve) {
  const SingularLocus locus = singular_points(curve);
  if (!locus.complete) {
    std::string why;
    for (const auto& n : locus.unresolved) why += (why.empty() ? "" : "; ") + n;
    throw Error(ErrorKind::IncompleteSingularLocus, why);
  }
  long total = 0;
  for (const auto& p : locus.points) total += milnor_local(curve, p.coords);
  return total;
}

long milnor_total(const HomPoly& f) { return milnor_total(Curve(f)); }

Classification classify(const Curve& curve, int mdr_value, std::size_t tau) {
  const long d = curve.degree();
  const long r = mdr_value;
  if (r == 0) return {ClassKind::LinePencil, std::nullopt, std::nullopt};
  const long free_tau = (d - 1) * (d - 1) - r * (d - r - 1);
  const long t = static_cast<long>(tau);
  if (t == free_tau) {
    if (!free_certificate(curve)) {
      throw Error(ErrorKind::CertificateMismatch,
                  "tau matches the free value but no determinant certificate exists");
    }
    return {ClassKind::Free, static_cast<int>(r), static_cast<int>(d - 1 - r)};
  }
  if (t == free_tau - 1) return {ClassKind::NearlyFree, static_cast<int>(r), static_cast<int>(d - r)};
  return {ClassKind::Neither, std::nullopt, std::nullopt};
}

Classification classify(const Curve& curve) {
  return classify(curve, mdr(curve), tjurina_total(curve));
}

Classification classify(const HomPoly& f) { return classify(Curve(f)); }

long chi_complement(int d, long mu) {
  const long dd = d;
  return (dd - 1) * (dd - 2) + 1 - mu;
}

ComplementData complement_data(int d, long mu, int components) {
  if (components < 1) throw Error(ErrorKind::InvalidArgument, "component count must be positive");
  ComplementData out;
  out.components = components;
  out.chi = chi_complement(d, mu);
  out.b1 = components - 1;
  out.b2 = out.chi - 1 + out.b1;
  if (out.b2 < 0) {
    throw Error(ErrorKind::NegativeBetti, "b2 = " + std::to_string(out.b2) + " for d = " +
                                              std::to_string(d) + ", mu = " + std::to_string(mu) +
                                              ", components = " + std::to_string(components));
  }
  return out;
}

}  // namespace plc
