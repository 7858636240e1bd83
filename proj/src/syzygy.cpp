#include "plcurve/syzygy.hpp"

#include "plcurve/algebra/gcd.hpp"
#include "plcurve/error.hpp"

namespace plc {

Curve::Curve(HomPoly f) : f_(std::move(f)) {
  if (f_.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the curve equation is zero");
  if (f_.degree() < 1) throw Error(ErrorKind::BadDegree, "a curve needs positive degree");
  if (!squarefree_check(f_)) {
    throw Error(ErrorKind::NotReduced, to_string(f_) + " has a repeated factor");
  }
  for (Var v : kVars) grad_[static_cast<int>(v)] = plc::partial(f_, v);
}

Syzygy::Syzygy(const Curve& curve, HomPoly a, HomPoly b, HomPoly c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.degree() != b_.degree() || a_.degree() != c_.degree()) {
    throw Error(ErrorKind::NotSyzygy, "components have different degrees");
  }
  const auto& g = curve.gradient();
  if (!(a_ * g[0] + b_ * g[1] + c_ * g[2]).is_zero()) {
    throw Error(ErrorKind::NotSyzygy, "a*f_x + b*f_y + c*f_z is not zero");
  }
}

ExactMatrix jacobian_map_matrix(const Curve& curve, int r) {
  const auto basis = monomial_basis(r);
  const std::size_t n = basis.size();
  const int target = r + curve.degree() - 1;
  ExactMatrix m(dim_S(target), 3 * n);
  for (int block = 0; block < 3; ++block) {
    const HomPoly& g = curve.gradient()[block];
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [mono, c] : g.terms()) {
        m(grlex_index(mono * basis[k]), block * n + k) += c;
      }
    }
  }
  return m;
}

ExactMatrix divergence_matrix(int j) {
  const auto basis = monomial_basis(j);
  const std::size_t n = basis.size();
  ExactMatrix m(dim_S(j - 1), 3 * n);
  for (int block = 0; block < 3; ++block) {
    const Var v = kVars[block];
    for (std::size_t k = 0; k < n; ++k) {
      const int e = basis[k].exponent(v);
      if (e == 0) continue;
      m(grlex_index(basis[k] / Monomial::of(v)), block * n + k) = e;
    }
  }
  return m;
}

std::array<HomPoly, 3> triple_from_vector(const Vector& v, int r) {
  const auto basis = monomial_basis(r);
  const std::size_t n = basis.size();
  std::array<HomPoly, 3> out;
  for (int block = 0; block < 3; ++block) {
    HomPoly::Terms terms;
    for (std::size_t k = 0; k < n; ++k) {
      if (v[block * n + k] != 0) terms.emplace(basis[k], v[block * n + k]);
    }
    out[block] = HomPoly(r, std::move(terms));
  }
  return out;
}

ARSlice ar_slice(const Curve& curve, int r) {
  if (r < 0 || r > 2 * curve.degree()) {
    throw Error(ErrorKind::BadRange, "syzygy degree " + std::to_string(r) + " outside 0.." +
                                         std::to_string(2 * curve.degree()));
  }
  ARSlice slice;
  slice.degree = r;
  for (const auto& v : kernel_basis(jacobian_map_matrix(curve, r))) {
    auto t = triple_from_vector(v, r);
    slice.basis.emplace_back(curve, std::move(t[0]), std::move(t[1]), std::move(t[2]));
  }
  return slice;
}

ARSlice ar_slice(const HomPoly& f, int r) { return ar_slice(Curve(f), r); }

std::size_t ar_dimension(const Curve& curve, int r) {
  if (r < 0) return 0;
  const ExactMatrix m = jacobian_map_matrix(curve, r);
  return m.cols() - rank(m);
}

int mdr(const Curve& curve) {
  for (int r = 0;; ++r) {
    if (ar_dimension(curve, r) > 0) return r;
  }
}

int mdr(const HomPoly& f) { return mdr(Curve(f)); }

std::size_t nj(const Curve& curve, int j) {
  if (j < 0) return 0;
  const ExactMatrix top = jacobian_map_matrix(curve, j);
  const ExactMatrix bottom = divergence_matrix(j);
  std::vector<Rational> entries(top.entries());
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  const ExactMatrix stacked(top.rows() + bottom.rows(), top.cols(), std::move(entries));
  return stacked.cols() - rank(stacked);
}

std::size_t nj(const HomPoly& f, int j) { return nj(Curve(f), j); }

bool is_multiple(const Syzygy& rho, const Syzygy& rho1) {
  const int e = rho.degree() - rho1.degree();
  if (e < 0) return false;
  if (rho.is_zero()) return true;
  if (rho1.is_zero()) return false;
  // Unknowns: coefficients of h in S_e. Equations: the three components of
  // h * rho1 - rho, coefficient by coefficient.
  const auto hbasis = monomial_basis(e);
  const std::size_t rows_per = dim_S(rho.degree());
  const std::size_t cols = hbasis.size();
  ExactMatrix lhs(3 * rows_per, cols);
  ExactMatrix aug(3 * rows_per, cols + 1);
  const std::array<const HomPoly*, 3> r1{&rho1.a(), &rho1.b(), &rho1.c()};
  const std::array<const HomPoly*, 3> r{&rho.a(), &rho.b(), &rho.c()};
  for (int comp = 0; comp < 3; ++comp) {
    for (std::size_t k = 0; k < cols; ++k) {
      for (const auto& [mono, c] : r1[comp]->terms()) {
        const std::size_t row = comp * rows_per + grlex_index(mono * hbasis[k]);
        lhs(row, k) += c;
        aug(row, k) += c;
      }
    }
    for (const auto& [mono, c] : r[comp]->terms()) aug(comp * rows_per + grlex_index(mono), cols) = c;
  }
  return rank(lhs) == rank(aug);
}

HomPoly saito_determinant(const Syzygy& rho1, const Syzygy& rho2) {
  const HomPoly x = HomPoly::variable(Var::x);
  const HomPoly y = HomPoly::variable(Var::y);
  const HomPoly z = HomPoly::variable(Var::z);
  return x * (rho1.b() * rho2.c() - rho1.c() * rho2.b()) -
         y * (rho1.a() * rho2.c() - rho1.c() * rho2.a()) +
         z * (rho1.a() * rho2.b() - rho1.b() * rho2.a());
}

std::optional<FreeCertificate> free_certificate(const Curve& curve) {
  const int r = mdr(curve);
  const int d = curve.degree();
  if (r < 1 || d - 1 - r < r) return std::nullopt;
  const ARSlice first = ar_slice(curve, r);
  const Syzygy& rho1 = first.basis.front();
  const ARSlice second = ar_slice(curve, d - 1 - r);
  for (const auto& rho : second.basis) {
    if (is_multiple(rho, rho1)) continue;
    const HomPoly det = saito_determinant(rho1, rho);
    if (det.is_zero()) continue;
    const Rational scale = det.leading_coefficient() / curve.f().leading_coefficient();
    if (det == curve.f() * scale) return FreeCertificate{rho1, rho, scale};
  }
  return std::nullopt;
}

std::optional<FreeCertificate> free_certificate(const HomPoly& f) {
  return free_certificate(Curve(f));
}

std::array<Syzygy, 3> koszul_syzygies(const Curve& curve) {
  const auto& g = curve.gradient();
  const HomPoly zero(g[0].degree());
  return {Syzygy(curve, g[1], -g[0], zero), Syzygy(curve, zero, g[2], -g[1]),
          Syzygy(curve, g[2], zero, -g[0])};
}

}  // namespace plc
