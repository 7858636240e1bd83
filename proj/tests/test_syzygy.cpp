#include <gtest/gtest.h>

#include <random>

#include "plcurve/algebra/gcd.hpp"
#include "plcurve/families.hpp"
#include "plcurve/syzygy.hpp"
#include "test_support.hpp"

using namespace plc;
using namespace plc::testing;

namespace {

Curve family(FamilyKind k, int d) { return Curve(generate(k, d)); }

std::size_t dimS(int e) { return e < 0 ? 0 : dim_S(e); }

// dim AR(f)_r from a matrix assembled here by multiplying out every monomial
// triple, ranked by dense Bareiss elimination.
std::size_t brute_force_ar_dim(const HomPoly& f, int r) {
  const HomPoly grad[3] = {partial(f, Var::x), partial(f, Var::y), partial(f, Var::z)};
  const auto dom = monomial_basis(r);
  const auto cod = monomial_basis(r + f.degree() - 1);
  ExactMatrix m(cod.size(), 3 * dom.size());
  std::size_t col = 0;
  for (int slot = 0; slot < 3; ++slot) {
    for (const auto& mono : dom) {
      const HomPoly img = HomPoly::monomial(mono) * grad[slot];
      for (std::size_t i = 0; i < cod.size(); ++i) m(i, col) = img.coefficient(cod[i]);
      ++col;
    }
  }
  return m.cols() - bareiss_rank(m);
}

}  // namespace

TEST(Syzygy, ConstructionChecksTheRelation) {
  const Curve c6 = family(FamilyKind::C, 6);
  EXPECT_NO_THROW(Syzygy(c6, HomPoly(1), P("x"), P("-2*y")));
  EXPECT_EQ(kind_of([&] { Syzygy(c6, HomPoly(1), P("x"), P("2*y")); }), ErrorKind::NotSyzygy);
  EXPECT_EQ(kind_of([&] { Syzygy(c6, HomPoly(1), P("x"), HomPoly(2)); }), ErrorKind::NotSyzygy);
  EXPECT_EQ(kind_of([] { Curve(P("x^2*y")); }), ErrorKind::NotReduced);
  EXPECT_EQ(kind_of([&] { ar_slice(c6, 13); }), ErrorKind::BadRange);
  EXPECT_EQ(kind_of([&] { ar_slice(c6, -1); }), ErrorKind::BadRange);
}

TEST(Syzygy, DegreeOneSlices) {
  const ARSlice s = ar_slice(family(FamilyKind::C, 6), 1);
  ASSERT_EQ(s.dim(), 1u);
  EXPECT_EQ(s.basis[0].a(), HomPoly(1));
  EXPECT_EQ(s.basis[0].b(), P("x"));
  EXPECT_EQ(s.basis[0].c(), P("-2*y"));

  const ARSlice t = ar_slice(family(FamilyKind::Cprime, 7), 1);
  ASSERT_EQ(t.dim(), 1u);
  EXPECT_EQ(t.basis[0].a(), P("6*x"));
  EXPECT_EQ(t.basis[0].b(), P("-y"));
  EXPECT_EQ(t.basis[0].c(), P("-8*z"));

  EXPECT_EQ(ar_slice(family(FamilyKind::C, 6), 0).dim(), 0u);
}

TEST(Syzygy, MinimalDegree) {
  for (int d = 3; d <= 12; ++d) EXPECT_EQ(mdr(generate(FamilyKind::C, d)), 1) << d;
  EXPECT_EQ(mdr(P("x*y*z")), 1);
  EXPECT_EQ(mdr(P("x^2+y^2+z^2")), 1);
  EXPECT_EQ(mdr(P("x^3+y^3+z^3")), 2);
  EXPECT_EQ(mdr(P("x*y")), 0);
}

TEST(Syzygy, KernelDimensionsOfDivergence) {
  for (int d = 4; d <= 9; ++d) EXPECT_EQ(nj(generate(FamilyKind::C, d), 1), 1u) << d;
  for (int d : {5, 7, 9}) {
    const Curve c = family(FamilyKind::Cprime, d);
    for (int j = 1; j <= d - 3; ++j) EXPECT_EQ(nj(c, j), 0u) << d << " " << j;
  }
  EXPECT_EQ(nj(generate(FamilyKind::Cdoubleprime, 8), 4), 2u);
}

TEST(Syzygy, IsMultiple) {
  const Curve c6 = family(FamilyKind::C, 6);
  const Syzygy rho1(c6, HomPoly(1), P("x"), P("-2*y"));
  EXPECT_TRUE(is_multiple(Syzygy(c6, HomPoly(2), P("x^2"), P("-2*x*y")), rho1));
  EXPECT_TRUE(is_multiple(Syzygy(c6, HomPoly(4), P("3*x*y^2*z"), P("-6*y^3*z")), rho1));
  const auto [r1, r2] = family_syzygies(FamilyKind::C, 6);
  EXPECT_TRUE(is_multiple(r1, rho1));
  EXPECT_FALSE(is_multiple(r2, rho1));
  // f_z = 3x(xz + y^2)^2 and f_y = 6y(xz + y^2)^2, so (0, f_z, -f_y) lies on rho1.
  const auto kz = koszul_syzygies(c6);
  EXPECT_FALSE(is_multiple(kz[0], rho1));
  EXPECT_TRUE(is_multiple(kz[1], rho1));
  EXPECT_FALSE(is_multiple(kz[2], rho1));
}

TEST(Syzygy, FreeCertificates) {
  const auto c5 = free_certificate(generate(FamilyKind::C, 5));
  ASSERT_TRUE(c5.has_value());
  EXPECT_EQ(c5->rho1.degree(), 1);
  EXPECT_EQ(c5->rho2.degree(), 3);
  EXPECT_NE(c5->scale, 0);
  EXPECT_EQ(saito_determinant(c5->rho1, c5->rho2), c5->scale * generate(FamilyKind::C, 5));

  EXPECT_FALSE(free_certificate(generate(FamilyKind::Cdoubleprime, 6)).has_value());
  EXPECT_FALSE(free_certificate(P("x^3+y^3+z^3")).has_value());
}

TEST(Syzygy, KoszulRelationsLieInTopSlice) {
  for (const char* s : {"x^3+y^3+z^3", "x*y*z", "x^4 + (x*z + y^2)^2"}) {
    const Curve c(P(s));
    const int d = c.degree();
    const ARSlice top = ar_slice(c, d - 1);
    for (const auto& k : koszul_syzygies(c)) {
      EXPECT_EQ(k.degree(), d - 1);
      // k is in the span of the basis: adding it does not raise the rank.
      ExactMatrix m(3 * dim_S(d - 1), top.dim() + 1);
      auto put = [&](const Syzygy& s, std::size_t col) {
        const auto basis = monomial_basis(d - 1);
        const HomPoly* parts[] = {&s.a(), &s.b(), &s.c()};
        for (int p = 0; p < 3; ++p) {
          for (std::size_t i = 0; i < basis.size(); ++i) m(p * basis.size() + i, col) = parts[p]->coefficient(basis[i]);
        }
      };
      for (std::size_t i = 0; i < top.dim(); ++i) put(top.basis[i], i);
      put(k, top.dim());
      EXPECT_EQ(rank(m), top.dim()) << s;
    }
  }
}

TEST(Syzygy, SliceDimensionsGrowAndBoundNj) {
  for (const char* s : {"x^3+y^3+z^3", "x*y*z*(x+y+z)", "x^5 + x^3*z^2 + 2*x^2*y^2*z + x*y^4"}) {
    const Curve c(P(s));
    const int d = c.degree();
    for (int r = d - 1; r < 2 * d; ++r) EXPECT_LE(ar_dimension(c, r), ar_dimension(c, r + 1)) << s;
    for (int j = 1; j <= d; ++j) EXPECT_LE(nj(c, j), ar_dimension(c, j)) << s;
  }
}

TEST(Syzygy, FreeAndNearlyFreeResolutionShapes) {
  for (int d = 3; d <= 8; ++d) {
    for (FamilyKind kind : {FamilyKind::C, FamilyKind::Cprime}) {
      const Curve c = family(kind, d);
      for (int k = 0; k <= d; ++k) {
        EXPECT_EQ(ar_dimension(c, k), dimS(k - 1) + dimS(k - (d - 2))) << to_string(kind) << d << " " << k;
      }
    }
    const Curve c = family(FamilyKind::Cdoubleprime, d);
    for (int k = 0; k <= d; ++k) {
      EXPECT_EQ(ar_dimension(c, k), dimS(k - 1) + 2 * dimS(k - (d - 1)) - dimS(k - d)) << d << " " << k;
    }
  }
}

TEST(Syzygy, RandomCurvesAgreeWithBruteForce) {
  std::mt19937 rng(31337);
  int checked = 0;
  for (int trial = 0; checked < 20; ++trial) {
    const int d = 4 + trial % 2;
    HomPoly f;
    switch (trial % 4) {
      case 0: f = random_poly(rng, d); break;
      case 1: f = random_poly(rng, 1) * random_poly(rng, d - 1); break;
      case 2: f = random_poly(rng, 2) * random_poly(rng, d - 2); break;
      default: f = random_poly(rng, 1) * random_poly(rng, 1) * random_poly(rng, d - 2); break;
    }
    if (f.is_zero() || !squarefree_check(f)) continue;
    ++checked;
    const Curve c(f);
    for (int r = 0; r <= d; ++r) {
      const ARSlice s = ar_slice(c, r);
      EXPECT_EQ(s.dim(), brute_force_ar_dim(f, r)) << to_string(f) << " r=" << r;
      EXPECT_EQ(s.dim(), ar_dimension(c, r));
    }
  }
}
