#pragma once

#include <array>
#include <optional>
#include <vector>

#include "plcurve/algebra/hom_poly.hpp"
#include "plcurve/exactla/matrix.hpp"

namespace plc {

// A reduced plane curve f = 0 together with its partial derivatives.
class Curve {
 public:
  // Throws BadDegree for constants and NotReduced when f has a repeated factor.
  explicit Curve(HomPoly f);

  const HomPoly& f() const noexcept { return f_; }
  int degree() const noexcept { return f_.degree(); }
  const HomPoly& partial(Var v) const { return grad_[static_cast<int>(v)]; }
  const std::array<HomPoly, 3>& gradient() const noexcept { return grad_; }

 private:
  HomPoly f_;
  std::array<HomPoly, 3> grad_;
};

// Jacobian relation a f_x + b f_y + c f_z = 0 of degree r.
class Syzygy {
 public:
  // Throws NotSyzygy if the components have different degrees or the relation
  // fails for the curve.
  Syzygy(const Curve& curve, HomPoly a, HomPoly b, HomPoly c);

  const HomPoly& a() const noexcept { return a_; }
  const HomPoly& b() const noexcept { return b_; }
  const HomPoly& c() const noexcept { return c_; }
  int degree() const noexcept { return a_.degree(); }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

  friend bool operator==(const Syzygy&, const Syzygy&) = default;

 private:
  HomPoly a_, b_, c_;
};

struct ARSlice {
  int degree = 0;
  std::vector<Syzygy> basis;
  std::size_t dim() const noexcept { return basis.size(); }
};

struct FreeCertificate {
  Syzygy rho1;
  Syzygy rho2;
  Rational scale;  // det((x,y,z), rho1, rho2) = scale * f
};

// Matrix of S_r^3 -> S_{r+d-1}, (a,b,c) -> a f_x + b f_y + c f_z. Columns are
// the a, b and c blocks, each in monomial_basis(r) order; rows follow
// monomial_basis(r+d-1).
ExactMatrix jacobian_map_matrix(const Curve& curve, int r);

// Matrix of S_j^3 -> S_{j-1}, (a,b,c) -> a_x + b_y + c_z, same column layout.
ExactMatrix divergence_matrix(int j);

// Splits a kernel vector of jacobian_map_matrix back into (a, b, c).
std::array<HomPoly, 3> triple_from_vector(const Vector& v, int r);

// Basis of AR(f)_r; BadRange unless 0 <= r <= 2d.
ARSlice ar_slice(const Curve& curve, int r);
ARSlice ar_slice(const HomPoly& f, int r);

// dim AR(f)_r by a rank computation alone.
std::size_t ar_dimension(const Curve& curve, int r);

int mdr(const Curve& curve);
int mdr(const HomPoly& f);

// dim ker(delta_j restricted to AR(f)_j), from one kernel of the stacked map.
std::size_t nj(const Curve& curve, int j);
std::size_t nj(const HomPoly& f, int j);

// rho = h * rho1 for some h of degree deg rho - deg rho1.
bool is_multiple(const Syzygy& rho, const Syzygy& rho1);

// det of the matrix with rows (x, y, z), rho1, rho2.
HomPoly saito_determinant(const Syzygy& rho1, const Syzygy& rho2);

std::optional<FreeCertificate> free_certificate(const Curve& curve);
std::optional<FreeCertificate> free_certificate(const HomPoly& f);

// (f_y, -f_x, 0), (0, f_z, -f_y), (f_z, 0, -f_x).
std::array<Syzygy, 3> koszul_syzygies(const Curve& curve);

}  // namespace plc
