#include <gtest/gtest.h>

#include "plcurve/algebra/gcd.hpp"
#include "plcurve/families.hpp"
#include "plcurve/syzygy.hpp"
#include "test_support.hpp"

using namespace plc;
using namespace plc::testing;

namespace {

const FamilyKind kAll[] = {FamilyKind::C, FamilyKind::Cprime, FamilyKind::Cdoubleprime};

CycloPoly cyclo(std::initializer_list<std::pair<int, long>> fs) {
  CycloPoly p;
  for (auto [n, m] : fs) p.multiply(n, m);
  return p;
}

}  // namespace

TEST(Families, Generators) {
  EXPECT_EQ(generate(FamilyKind::C, 5), P("x^5 + x*(x*z + y^2)^2"));
  EXPECT_EQ(generate(FamilyKind::C, 6), P("x^6 + (x*z + y^2)^3"));
  EXPECT_EQ(generate(FamilyKind::C, 3), P("x*(x^2 + x*z + y^2)"));
  EXPECT_EQ(generate(FamilyKind::Cprime, 6), P("x^3*z^3 + x*y^4*z"));
  EXPECT_EQ(generate(FamilyKind::Cprime, 7), P("x*(x^3*z^3 + y^6)"));
  EXPECT_EQ(generate(FamilyKind::Cprime, 3), P("x*(x*z + y^2)"));
  EXPECT_EQ(generate(FamilyKind::Cdoubleprime, 7), P("x^3*y*z^3 + y^7"));
  EXPECT_EQ(generate(FamilyKind::Cdoubleprime, 3), P("y*(x*z + y^2)"));
  for (FamilyKind k : kAll) {
    EXPECT_EQ(kind_of([k] { generate(k, 2); }), ErrorKind::BadDegree);
    EXPECT_EQ(kind_of([k] { oracle(k, 1); }), ErrorKind::BadDegree);
  }
}

TEST(Families, KindNames) {
  EXPECT_EQ(parse_family_kind("C"), FamilyKind::C);
  EXPECT_EQ(parse_family_kind("Cprime"), FamilyKind::Cprime);
  EXPECT_EQ(parse_family_kind("C'"), FamilyKind::Cprime);
  EXPECT_EQ(parse_family_kind("C''"), FamilyKind::Cdoubleprime);
  EXPECT_EQ(to_string(FamilyKind::Cdoubleprime), "Cdoubleprime");
  EXPECT_EQ(kind_of([] { parse_family_kind("D"); }), ErrorKind::InvalidArgument);
}

TEST(Families, GeneratorsAreReduced) {
  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 20; ++d) {
      const HomPoly f = generate(k, d);
      EXPECT_EQ(f.degree(), d);
      EXPECT_TRUE(squarefree_check(f)) << to_string(k) << " " << d;
    }
  }
}

TEST(Families, RationalFactors) {
  for (int d = 3; d <= 16; ++d) {
    const bool odd = d % 2 == 1;
    const HomPoly c = generate(FamilyKind::C, d);
    EXPECT_EQ(divide_exact(c, P("x")).has_value(), odd) << d;
    const HomPoly cp = generate(FamilyKind::Cprime, d);
    EXPECT_TRUE(divide_exact(cp, P("x")).has_value());
    EXPECT_EQ(divide_exact(cp, P("x*z")).has_value(), !odd) << d;
    const HomPoly cpp = generate(FamilyKind::Cdoubleprime, d);
    EXPECT_EQ(divide_exact(cpp, P("y")).has_value(), odd) << d;
    // Each rational linear factor is one component; the rest come in a pencil.
    EXPECT_EQ(components(FamilyKind::C, d), d / 2 + (odd ? 1 : 0));
    EXPECT_EQ(components(FamilyKind::Cprime, d), d / 2 + 1);
    EXPECT_EQ(components(FamilyKind::Cdoubleprime, d), d / 2 + (odd ? 1 : 0));
  }
  EXPECT_EQ(divide_exact(generate(FamilyKind::Cprime, 4), P("x*z + y^2")), P("x*z"));
}

TEST(Families, OracleExamples) {
  const FamilyOracle c7 = oracle(FamilyKind::C, 7);
  EXPECT_EQ(c7.mdr, 1);
  EXPECT_EQ(to_string(c7.classification), "Free(1,5)");
  EXPECT_EQ(c7.tau, 31);
  EXPECT_EQ(c7.mu, 33);
  EXPECT_EQ(c7.chi, -2);
  EXPECT_EQ(c7.b1, 3);
  EXPECT_EQ(c7.b2, 0);
  ASSERT_TRUE(c7.alexander.has_value());
  EXPECT_EQ(*c7.alexander, cyclo({{1, 3}, {7, 2}}));

  const FamilyOracle cp8 = oracle(FamilyKind::Cprime, 8);
  EXPECT_EQ(to_string(cp8.classification), "Free(1,6)");
  EXPECT_EQ(cp8.tau, 43);
  EXPECT_EQ(cp8.mu, 43);
  EXPECT_EQ(cp8.chi, 0);
  EXPECT_EQ(cp8.b1, 4);
  EXPECT_EQ(cp8.b2, 3);

  const FamilyOracle cpp6 = oracle(FamilyKind::Cdoubleprime, 6);
  EXPECT_EQ(to_string(cpp6.classification), "NearlyFree(1,5)");
  EXPECT_EQ(cpp6.tau, 20);
  EXPECT_EQ(cpp6.mu, 20);
  EXPECT_EQ(cpp6.chi, 1);
  EXPECT_EQ(cpp6.b1, 2);
  EXPECT_EQ(cpp6.b2, 2);

  ASSERT_TRUE(oracle(FamilyKind::C, 6).delta2.has_value());
  EXPECT_EQ(*oracle(FamilyKind::C, 6).delta2, cyclo({{2, 1}, {6, 1}}));
  EXPECT_EQ(*oracle(FamilyKind::C, 8).delta2, cyclo({{8, 1}}));
  EXPECT_EQ(*oracle(FamilyKind::Cprime, 9).alexander, cyclo({{1, 4}}));
  EXPECT_EQ(oracle(FamilyKind::C, 4).tau, 7);
  EXPECT_EQ(oracle(FamilyKind::C, 4).mu, 7);
}

TEST(Families, OracleConsistency) {
  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 14; ++d) {
      const FamilyOracle o = oracle(k, d);
      EXPECT_EQ(o.f, generate(k, d));
      EXPECT_EQ(o.components, components(k, d));
      EXPECT_EQ(o.b1, o.components - 1);
      EXPECT_EQ(o.chi, 1 - o.b1 + o.b2);
      // chi(C) = 3d - d^2 + mu and chi(U) = 3 - chi(C)
      EXPECT_EQ(o.chi, 3 - (3 * d - d * d + o.mu)) << to_string(k) << " " << d;
      ASSERT_EQ(o.nj.size(), static_cast<std::size_t>(d - 3));
      if (k == FamilyKind::C) {
        ASSERT_EQ(o.singular_points.size(), 1u);
        EXPECT_EQ(o.singular_points[0].milnor, std::optional<int>(static_cast<int>(o.mu)));
      }
    }
  }
}

TEST(Families, ExplicitSyzygies) {
  {
    const auto [r1, r2] = family_syzygies(FamilyKind::C, 6);
    const Curve c(generate(FamilyKind::C, 6));
    EXPECT_TRUE(is_multiple(r1, Syzygy(c, HomPoly(1), P("x"), P("-2*y"))));
    EXPECT_EQ(r2.degree(), 4);
  }
  {
    const auto [r1, r2] = family_syzygies(FamilyKind::Cprime, 7);
    EXPECT_EQ(r1.a(), P("6*x"));
    EXPECT_EQ(r1.b(), P("-y"));
    EXPECT_EQ(r1.c(), P("-8*z"));
  }
  {
    const auto [r1, r2] = family_syzygies(FamilyKind::Cdoubleprime, 5);
    const Curve c(generate(FamilyKind::Cdoubleprime, 5));
    EXPECT_EQ(r1.a(), P("x"));
    EXPECT_TRUE(r1.b().is_zero());
    EXPECT_EQ(r1.c(), P("-z"));
    EXPECT_EQ(r2.a(), c.partial(Var::y));
    EXPECT_EQ(r2.b(), -c.partial(Var::x));
  }
  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 12; ++d) {
      const auto [r1, r2] = family_syzygies(k, d);
      EXPECT_FALSE(is_multiple(r2, r1));
      EXPECT_EQ(r1.degree(), oracle(k, d).mdr);
      if (k == FamilyKind::Cdoubleprime) continue;
      // det((x,y,z), rho1, rho2) is a nonzero multiple of f exactly when free.
      const HomPoly det = saito_determinant(r1, r2);
      ASSERT_FALSE(det.is_zero());
      const auto q = divide_exact(det, generate(k, d));
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(q->degree(), 0);
    }
  }
}

TEST(Families, KernelDimensionClosedForms) {
  for (FamilyKind k : kAll) {
    for (int d = 4; d <= 10; ++d) {
      const HomPoly f = generate(k, d);
      const bool vanish = k == FamilyKind::Cprime && d % 2 == 1;
      for (int j = 1; j <= d - 3; ++j) {
        EXPECT_EQ(nj(f, j), vanish ? 0u : static_cast<std::size_t>((j + 1) / 2))
            << to_string(k) << " " << d << " " << j;
      }
    }
  }
}

TEST(Families, VerifyPasses) {
  for (auto [k, d] : {std::pair{FamilyKind::C, 4}, {FamilyKind::C, 6}, {FamilyKind::Cprime, 9},
                      {FamilyKind::Cprime, 8}, {FamilyKind::Cdoubleprime, 7}}) {
    const VerificationReport rep = verify(k, d);
    EXPECT_TRUE(rep.passed()) << to_table(rep);
    EXPECT_FALSE(rep.claims.empty());
    for (const auto& c : rep.claims) EXPECT_TRUE(c.pass) << c.name;
  }
  const VerificationReport c6 = verify(FamilyKind::C, 6);
  bool saw = false;
  for (const auto& c : c6.claims) {
    if (c.name == "Delta2") {
      saw = true;
      EXPECT_EQ(c.expected, "Phi2*Phi6");
    }
  }
  EXPECT_TRUE(saw);
  const std::string table = to_table(c6);
  EXPECT_NE(table.find("PASS"), std::string::npos);
  EXPECT_EQ(table.find("FAIL"), std::string::npos);
}
