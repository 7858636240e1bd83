#include "plcurve/derham.hpp"

#include "plcurve/error.hpp"
#include "plcurve/exactla/matrix.hpp"
#include "plcurve/families.hpp"

namespace plc {

namespace {

const HomPoly& X() {
  static const HomPoly v = HomPoly::variable(Var::x);
  return v;
}
const HomPoly& Y() {
  static const HomPoly v = HomPoly::variable(Var::y);
  return v;
}
const HomPoly& Z() {
  static const HomPoly v = HomPoly::variable(Var::z);
  return v;
}

void require_same_degree(const HomPoly& a, const HomPoly& b, const HomPoly& c, const char* what) {
  if (a.degree() != b.degree() || b.degree() != c.degree()) {
    throw Error(ErrorKind::DegreeMismatch,
                std::string(what) + " coefficients have degrees " + std::to_string(a.degree()) +
                    ", " + std::to_string(b.degree()) + ", " + std::to_string(c.degree()));
  }
}

}  // namespace

TwoForm::TwoForm(HomPoly A, HomPoly B, HomPoly C)
    : a_(std::move(A)), b_(std::move(B)), c_(std::move(C)) {
  require_same_degree(a_, b_, c_, "2-form");
}

TwoForm operator*(const HomPoly& h, const TwoForm& w) {
  return TwoForm(h * w.a_, h * w.b_, h * w.c_);
}

OneForm::OneForm(HomPoly P, HomPoly Q, HomPoly R)
    : p_(std::move(P)), q_(std::move(Q)), r_(std::move(R)) {
  require_same_degree(p_, q_, r_, "1-form");
}

TwoForm omega(const Syzygy& rho) { return TwoForm(rho.a(), rho.b(), rho.c()); }

TwoForm omega(const HomPoly& a, const HomPoly& b, const HomPoly& c) { return TwoForm(a, b, c); }

HomPoly d2(const TwoForm& w) {
  return partial(w.A(), Var::x) + partial(w.B(), Var::y) + partial(w.C(), Var::z);
}

HomPoly wedge_df(const HomPoly& f, const TwoForm& w) {
  return w.A() * partial(f, Var::x) + w.B() * partial(f, Var::y) + w.C() * partial(f, Var::z);
}

OneForm euler_contract(const TwoForm& w) {
  // i_E(dy^dz) = y dz - z dy, i_E(dx^dz) = x dz - z dx, i_E(dx^dy) = x dy - y dx
  return OneForm(w.B() * Z() - w.C() * Y(), w.C() * X() - w.A() * Z(), w.A() * Y() - w.B() * X());
}

std::array<HomPoly, 3> eigen_rho1(FamilyKind kind) {
  if (kind == FamilyKind::C) return {HomPoly(1), -X(), Rational(2) * Y()};
  return {X(), HomPoly(1), -Z()};
}

std::vector<HomPoly> basis_E(FamilyKind kind, int e) {
  if (e < 0) throw Error(ErrorKind::BadRange, "multiplier degree must be non-negative");
  HomPoly u, v;
  HomPoly odd;
  if (kind == FamilyKind::C) {
    u = X() * X();
    v = X() * Z() + Y() * Y();
    odd = X();
  } else {
    u = X() * Z();
    v = Y() * Y();
    odd = Y();
  }
  const int e1 = e / 2;
  std::vector<HomPoly> out;
  out.reserve(static_cast<std::size_t>(e1) + 1);
  for (int i = e1; i >= 0; --i) {
    HomPoly h = u.pow(static_cast<unsigned>(i)) * v.pow(static_cast<unsigned>(e1 - i));
    if (e % 2 == 1) h = odd * h;
    out.push_back(std::move(h));
  }
  return out;
}

HomPoly multiplier_pde(FamilyKind kind, const HomPoly& h) {
  if (kind == FamilyKind::C) {
    return X() * partial(h, Var::y) - Rational(2) * Y() * partial(h, Var::z);
  }
  return X() * partial(h, Var::x) - Z() * partial(h, Var::z);
}

std::vector<EigenForm> eigenbasis(FamilyKind kind, int d, int k) {
  if (d < 3) throw Error(ErrorKind::BadDegree, "family degree must be at least 3");
  if (k < 3 || k > d - 1) {
    throw Error(ErrorKind::BadRange, "k = " + std::to_string(k) + " outside 3.." +
                                         std::to_string(d - 1));
  }
  // Odd-degree C' has no H^{1,0} classes of this kind: all n_j vanish.
  if (kind == FamilyKind::Cprime && d % 2 == 1) return {};

  const HomPoly f = generate(kind, d);
  const auto rho = eigen_rho1(kind);
  const TwoForm w1 = omega(rho[0], rho[1], rho[2]);
  std::vector<EigenForm> out;
  for (HomPoly& h : basis_E(kind, k - 3)) {
    TwoForm parent = h * w1;
    if (parent.degree() != k) {
      throw Error(ErrorKind::VerificationFailure, "parent form has degree " +
                                                      std::to_string(parent.degree()));
    }
    if (!d2(parent).is_zero()) {
      throw Error(ErrorKind::VerificationFailure, "h*omega_1 is not closed for h = " + to_string(h));
    }
    if (!wedge_df(f, parent).is_zero()) {
      throw Error(ErrorKind::VerificationFailure, "df ^ h*omega_1 != 0 for h = " + to_string(h));
    }
    OneForm alpha = euler_contract(parent);
    out.push_back(EigenForm{k, d, std::move(h), std::move(parent), std::move(alpha), true});
  }
  return out;
}

std::size_t weighted_euler_kernel_dim(int m, int e) {
  if (e < 0) return 0;
  const auto basis = monomial_basis(e);
  const std::size_t n = basis.size();
  ExactMatrix op(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const HomPoly h = HomPoly::monomial(basis[j]);
    HomPoly img = Rational(-3) * h;
    if (e > 0) {
      img += Rational(2 * m) * X() * partial(h, Var::x) - Y() * partial(h, Var::y) -
             Rational(2 * (m + 1)) * Z() * partial(h, Var::z);
    }
    for (const auto& [mono, c] : img.terms()) op(grlex_index(mono), j) = c;
  }
  return kernel_basis(op).size();
}

namespace {

std::string latex_rational(const Rational& c) {
  if (is_integer(c)) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string latex_monomial(const Monomial& m) {
  std::string out;
  for (Var v : kVars) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out += var_name(v);
    if (e == 1) continue;
    out += e >= 10 ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

// Terms with signs, the first one carrying a leading "-" when negative.
std::string latex_terms(const HomPoly& p) {
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const std::string mono = latex_monomial(m);
    if (mono.empty()) {
      out += latex_rational(a);
    } else {
      if (a != 1) out += latex_rational(a);
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string to_latex(const HomPoly& p) {
  if (p.is_zero()) return "0";
  return latex_terms(p);
}

std::string to_latex(const OneForm& w) {
  static const char* const kDiffs[] = {"\\,dx", "\\,dy", "\\,dz"};
  const HomPoly* comps[] = {&w.P(), &w.Q(), &w.R()};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    const HomPoly& c = *comps[i];
    if (c.is_zero()) continue;
    const bool neg = c.leading_coefficient() < 0;
    const HomPoly mag = neg ? -c : c;
    std::string body;
    if (mag.term_count() > 1) {
      body = "(" + latex_terms(mag) + ")";
    } else {
      body = latex_terms(mag);
      if (body == "1") body.clear();
    }
    if (out.empty()) {
      out += neg ? "-" : "";
    } else {
      out += neg ? " - " : " + ";
    }
    out += body.empty() ? std::string(kDiffs[i] + 2) : body + kDiffs[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace plc
