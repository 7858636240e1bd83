#pragma once

#include <string>
#include <vector>

#include "plcurve/family_kind.hpp"
#include "plcurve/syzygy.hpp"

namespace plc {

// A dy^dz - B dx^dz + C dx^dy.
class TwoForm {
 public:
  // DegreeMismatch unless A, B, C share a degree.
  TwoForm(HomPoly A, HomPoly B, HomPoly C);

  const HomPoly& A() const noexcept { return a_; }
  const HomPoly& B() const noexcept { return b_; }
  const HomPoly& C() const noexcept { return c_; }
  int poly_degree() const noexcept { return a_.degree(); }
  int degree() const noexcept { return a_.degree() + 2; }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

  friend TwoForm operator*(const HomPoly& h, const TwoForm& w);
  friend bool operator==(const TwoForm&, const TwoForm&) = default;

 private:
  HomPoly a_, b_, c_;
};

// P dx + Q dy + R dz.
class OneForm {
 public:
  OneForm(HomPoly P, HomPoly Q, HomPoly R);

  const HomPoly& P() const noexcept { return p_; }
  const HomPoly& Q() const noexcept { return q_; }
  const HomPoly& R() const noexcept { return r_; }
  int poly_degree() const noexcept { return p_.degree(); }

  friend bool operator==(const OneForm&, const OneForm&) = default;

 private:
  HomPoly p_, q_, r_;
};

struct EigenForm {
  int k = 0;
  int d = 0;         // eigenvalue exp(-2 pi i k / d), kept as the pair (k, d)
  HomPoly h;         // multiplier
  TwoForm parent;    // h * omega_1
  OneForm form;      // Euler contraction of parent
  bool restricted = true;  // stands for the pullback to the Milnor fiber
};

TwoForm omega(const Syzygy& rho);
TwoForm omega(const HomPoly& a, const HomPoly& b, const HomPoly& c);

// Coefficient of dx^dy^dz in the exterior derivative.
HomPoly d2(const TwoForm& w);

// Coefficient of dx^dy^dz in df ^ w.
HomPoly wedge_df(const HomPoly& f, const TwoForm& w);

// Contraction with x d/dx + y d/dy + z d/dz.
OneForm euler_contract(const TwoForm& w);

// The syzygy whose form generates the eigenforms: (0,-x,2y) for C and
// (x,0,-z) for C' and C''.
std::array<HomPoly, 3> eigen_rho1(FamilyKind kind);

// Degree-e polynomials in u, v of weighted degree e (u, v of degree 2), with an
// extra factor x (C) or y (C', C'') when e is odd.
// C: u = x^2, v = xz+y^2.   C', C'': u = xz, v = y^2.
std::vector<HomPoly> basis_E(FamilyKind kind, int e);

// x h_y - 2y h_z for C, x h_x - z h_z for C' and C''.
HomPoly multiplier_pde(FamilyKind kind, const HomPoly& h);

// One form per element of basis_E(kind, k-3); empty for C' with odd d.
// BadRange unless 3 <= k <= d-1; VerificationFailure if a parent form is not
// closed or not killed by df.
std::vector<EigenForm> eigenbasis(FamilyKind kind, int d, int k);

// dim ker(h -> 2m x h_x - y h_y - 2(m+1) z h_z - 3h) on S_e.
std::size_t weighted_euler_kernel_dim(int m, int e);

std::string to_latex(const HomPoly& p);
std::string to_latex(const OneForm& w);

}  // namespace plc
