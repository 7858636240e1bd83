#include <gtest/gtest.h>

#include "plcurve/derham.hpp"
#include "plcurve/exactla/matrix.hpp"
#include "plcurve/families.hpp"
#include "test_support.hpp"

using namespace plc;
using namespace plc::testing;

namespace {

const FamilyKind kAll[] = {FamilyKind::C, FamilyKind::Cprime, FamilyKind::Cdoubleprime};

// Rank of a list of forms of one degree, via their coefficient vectors.
std::size_t span_dim(const std::vector<OneForm>& forms) {
  if (forms.empty()) return 0;
  const int deg = forms.front().poly_degree();
  const std::size_t n = dim_S(deg);
  ExactMatrix m(3 * n, forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j) {
    const HomPoly* comps[] = {&forms[j].P(), &forms[j].Q(), &forms[j].R()};
    for (std::size_t b = 0; b < 3; ++b) {
      for (const auto& [mono, c] : comps[b]->terms()) m(b * n + grlex_index(mono), j) = c;
    }
  }
  return rank(m);
}

}  // namespace

TEST(Forms, ExteriorOperations) {
  const TwoForm w = omega(P("6*x"), P("-y"), P("-8*z"));
  EXPECT_EQ(w.degree(), 3);
  EXPECT_EQ(d2(w), P("-3"));
  EXPECT_EQ(wedge_df(P("x*y*z"), w), P("6*x*y*z - x*y*z - 8*x*y*z"));
  // i_E(dy^dz) = y dz - z dy
  const OneForm e = euler_contract(omega(P("1"), HomPoly(0), HomPoly(0)));
  EXPECT_EQ(e, OneForm(HomPoly(1), P("-z"), P("y")));
  EXPECT_EQ(kind_of([] { omega(P("x"), P("y^2"), P("z")); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of([] { OneForm(P("x"), P("1"), P("z")); }), ErrorKind::DegreeMismatch);
}

TEST(Forms, EulerContractionIsKilledByEuler) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int deg = 1 + t % 5;
    const OneForm a = euler_contract(omega(random_poly(rng, deg), random_poly(rng, deg), random_poly(rng, deg)));
    EXPECT_TRUE((P("x") * a.P() + P("y") * a.Q() + P("z") * a.R()).is_zero());
  }
}

TEST(Forms, GeneratingSyzygy) {
  for (FamilyKind kind : kAll) {
    const auto r = eigen_rho1(kind);
    const TwoForm w = omega(r[0], r[1], r[2]);
    EXPECT_TRUE(d2(w).is_zero());
    for (int d = 3; d <= 14; ++d) {
      // For odd C' the relation fails, matching the absence of eigenforms there.
      const bool expect = !(kind == FamilyKind::Cprime && d % 2 == 1);
      EXPECT_EQ(wedge_df(generate(kind, d), w).is_zero(), expect) << to_string(kind) << " " << d;
    }
  }
}

TEST(Forms, MultiplierBasis) {
  EXPECT_EQ(basis_E(FamilyKind::C, 0), std::vector<HomPoly>{P("1")});
  EXPECT_EQ(basis_E(FamilyKind::C, 1), std::vector<HomPoly>{P("x")});
  EXPECT_EQ(basis_E(FamilyKind::C, 2), (std::vector<HomPoly>{P("x^2"), P("x*z + y^2")}));
  EXPECT_EQ(basis_E(FamilyKind::Cprime, 3), (std::vector<HomPoly>{P("x*y*z"), P("y^3")}));
  EXPECT_EQ(kind_of([] { basis_E(FamilyKind::C, -1); }), ErrorKind::BadRange);
  for (FamilyKind kind : kAll) {
    for (int e = 0; e <= 10; ++e) {
      const auto b = basis_E(kind, e);
      EXPECT_EQ(b.size(), static_cast<std::size_t>(e / 2 + 1));
      ExactMatrix m(dim_S(e), b.size());
      for (std::size_t j = 0; j < b.size(); ++j) {
        EXPECT_TRUE(multiplier_pde(kind, b[j]).is_zero());
        for (const auto& [mono, c] : b[j].terms()) m(grlex_index(mono), j) = c;
      }
      EXPECT_EQ(rank(m), b.size()) << e;
    }
  }
}

TEST(Forms, MultiplierPdeSolutionSpace) {
  // The PDE kernel on S_e has exactly the dimension of the basis.
  for (FamilyKind kind : {FamilyKind::C, FamilyKind::Cprime}) {
    for (int e = 0; e <= 8; ++e) {
      const auto basis = monomial_basis(e);
      const std::size_t n = basis.size();
      ExactMatrix m(dim_S(e), n);
      for (std::size_t j = 0; j < n; ++j) {
        const HomPoly img = multiplier_pde(kind, HomPoly::monomial(basis[j]));
        for (const auto& [mono, c] : img.terms()) m(grlex_index(mono), j) = c;
      }
      EXPECT_EQ(n - rank(m), static_cast<std::size_t>(e / 2 + 1)) << e;
    }
  }
}

TEST(Forms, EigenbasisMatchesKernelDimensions) {
  for (FamilyKind kind : kAll) {
    for (int d = 4; d <= 9; ++d) {
      const HomPoly f = generate(kind, d);
      for (int k = 3; k <= d - 1; ++k) {
        const auto forms = eigenbasis(kind, d, k);
        EXPECT_EQ(forms.size(), nj(f, k - 2)) << to_string(kind) << " " << d << " " << k;
        std::vector<OneForm> ones;
        for (const auto& ef : forms) {
          EXPECT_EQ(ef.parent.degree(), k);
          EXPECT_TRUE(d2(ef.parent).is_zero());
          EXPECT_TRUE(wedge_df(f, ef.parent).is_zero());
          EXPECT_EQ(ef.form, euler_contract(ef.parent));
          EXPECT_EQ(ef.k, k);
          EXPECT_EQ(ef.d, d);
          ones.push_back(ef.form);
        }
        EXPECT_EQ(span_dim(ones), forms.size());
      }
    }
  }
}

TEST(Forms, EigenbasisArguments) {
  EXPECT_TRUE(eigenbasis(FamilyKind::Cprime, 7, 4).empty());
  EXPECT_EQ(eigenbasis(FamilyKind::Cprime, 8, 5).size(), 2u);
  EXPECT_EQ(kind_of([] { eigenbasis(FamilyKind::C, 7, 2); }), ErrorKind::BadRange);
  EXPECT_EQ(kind_of([] { eigenbasis(FamilyKind::C, 7, 7); }), ErrorKind::BadRange);
  EXPECT_EQ(kind_of([] { eigenbasis(FamilyKind::C, 2, 3); }), ErrorKind::BadDegree);
}

TEST(Forms, WeightedEulerKernel) {
  for (int m = 1; m <= 6; ++m) {
    for (int e = 0; e < 2 * m - 2; ++e) EXPECT_EQ(weighted_euler_kernel_dim(m, e), 0u) << m << " " << e;
  }
  // m = 2, e = 2: x*y has weight 4 - 1 - 3 = 0.
  EXPECT_EQ(weighted_euler_kernel_dim(2, 2), 1u);
  EXPECT_EQ(weighted_euler_kernel_dim(3, -1), 0u);
}

TEST(Forms, Latex) {
  EXPECT_EQ(to_latex(HomPoly(3)), "0");
  EXPECT_EQ(to_latex(P("x^10 - 3*y*z^9")), "x^{10}-3yz^9");
  EXPECT_EQ(to_latex(P("1/2*x")), "\\frac{1}{2}x");
  EXPECT_EQ(to_latex(OneForm(P("-x"), P("y"), HomPoly(1))), "-x\\,dx + y\\,dy");
  EXPECT_EQ(to_latex(OneForm(P("1"), P("-1"), P("2"))), "dx - dy + 2\\,dz");
  const auto forms = eigenbasis(FamilyKind::C, 7, 3);
  ASSERT_EQ(forms.size(), 1u);
  EXPECT_EQ(to_latex(forms[0].form), "-(xz+2y^2)\\,dx + 2xy\\,dy + x^2\\,dz");
}
