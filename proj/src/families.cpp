#include "plcurve/families.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "plcurve/algebra/gcd.hpp"
#include "plcurve/derham.hpp"
#include "plcurve/error.hpp"

namespace plc {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::C: return "C";
    case FamilyKind::Cprime: return "Cprime";
    case FamilyKind::Cdoubleprime: return "Cdoubleprime";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "C") return FamilyKind::C;
  if (name == "Cprime" || name == "C'") return FamilyKind::Cprime;
  if (name == "Cdoubleprime" || name == "C''") return FamilyKind::Cdoubleprime;
  throw Error(ErrorKind::InvalidArgument,
              "unknown family '" + std::string(name) + "' (expected C, Cprime or Cdoubleprime)");
}

namespace {

HomPoly X() { return HomPoly::variable(Var::x); }
HomPoly Y() { return HomPoly::variable(Var::y); }
HomPoly Z() { return HomPoly::variable(Var::z); }

unsigned U(int e) { return static_cast<unsigned>(e); }

void check_degree(int d) {
  if (d < 3) throw Error(ErrorKind::BadDegree, "family degree must be at least 3, got " + std::to_string(d));
}

Point pt(long a, long b, long c) { return {Rational(a), Rational(b), Rational(c)}; }

}  // namespace

HomPoly generate(FamilyKind kind, int d) {
  check_degree(d);
  const int m = d / 2;
  const bool odd = d % 2 == 1;
  const HomPoly xz = X() * Z();
  switch (kind) {
    case FamilyKind::C: {
      const HomPoly g = X().pow(U(2 * m)) + (xz + Y() * Y()).pow(U(m));
      return odd ? X() * g : g;
    }
    case FamilyKind::Cprime:
      if (odd) return X() * (xz.pow(U(m)) + Y().pow(U(2 * m)));
      return xz * (xz.pow(U(m - 1)) + Y().pow(U(2 * m - 2)));
    case FamilyKind::Cdoubleprime: {
      const HomPoly g = xz.pow(U(m)) + Y().pow(U(2 * m));
      return odd ? Y() * g : g;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

int components(FamilyKind kind, int d) {
  check_degree(d);
  const int m = d / 2;
  const bool odd = d % 2 == 1;
  switch (kind) {
    case FamilyKind::C: return odd ? m + 1 : m;
    case FamilyKind::Cprime: return m + 1;
    case FamilyKind::Cdoubleprime: return odd ? m + 1 : m;
  }
  return 1;
}

FamilyOracle oracle(FamilyKind kind, int d) {
  check_degree(d);
  const long dd = d;
  const long m = d / 2;
  const bool odd = d % 2 == 1;
  FamilyOracle o;
  o.kind = kind;
  o.d = d;
  o.f = generate(kind, d);
  o.components = components(kind, d);
  o.mdr = 1;
  const long free_tau = (dd - 1) * (dd - 1) - (dd - 2);

  switch (kind) {
    case FamilyKind::C:
      o.classification = {ClassKind::Free, 1, d - 2};
      o.tau = free_tau;
      o.mu = (dd - 1) * (dd - 1) - m;
      o.chi = 2 - dd + m;
      o.b1 = odd ? m : m - 1;
      o.b2 = 0;
      o.singular_points = {{pt(0, 0, 1), static_cast<int>(o.mu)}};
      break;
    case FamilyKind::Cprime:
      o.classification = {ClassKind::Free, 1, d - 2};
      o.tau = free_tau;
      o.mu = o.tau;
      o.chi = 0;
      o.b1 = m;
      o.b2 = m - 1;
      if (odd && m == 1) {
        o.singular_points = {{pt(0, 0, 1), std::nullopt}};
      } else if (odd) {
        o.singular_points = {{pt(0, 0, 1), std::nullopt}, {pt(1, 0, 0), std::nullopt}};
      } else {
        o.singular_points = {{pt(0, 0, 1), std::nullopt},
                             {pt(0, 1, 0), std::nullopt},
                             {pt(1, 0, 0), std::nullopt}};
      }
      break;
    case FamilyKind::Cdoubleprime:
      o.classification = {ClassKind::NearlyFree, 1, d - 1};
      o.tau = free_tau - 1;
      o.mu = o.tau;
      o.chi = 1;
      o.b1 = (dd - 1) / 2;
      o.b2 = o.b1;
      o.singular_points = {{pt(0, 0, 1), std::nullopt}, {pt(1, 0, 0), std::nullopt}};
      break;
  }

  const bool cprime_odd = kind == FamilyKind::Cprime && odd;
  for (int j = 1; j <= d - 3; ++j) o.nj.push_back(cprime_odd ? 0 : (j + 1) / 2);

  if (cprime_odd) {
    o.spectrum.add(2, m);
  } else {
    for (int j = 3; j <= d - 1; ++j) {
      o.spectrum.add(1 + make_rational(j, d), (j - 1) / 2);
      o.spectrum.add(3 - make_rational(j, d), (j - 1) / 2);
    }
    o.spectrum.add(2, o.b1);
  }

  if (kind == FamilyKind::C && odd) {
    // (t - 1)(t^d - 1)^{-chi}
    CycloPoly a;
    a.multiply(1, 1 - o.chi);
    for (int n = 2; n <= d; ++n) {
      if (d % n == 0) a.multiply(n, -o.chi);
    }
    o.alexander = a;
    o.milnor_fiber_b2 = 0;
  }
  if (cprime_odd) {
    CycloPoly a;
    a.multiply(1, m);
    o.alexander = a;
  }
  if (kind == FamilyKind::C && d == 6) {
    CycloPoly a;
    a.multiply(2, 1);
    a.multiply(6, 1);
    o.delta2 = a;
  }
  if (kind == FamilyKind::C && d == 8) {
    CycloPoly a;
    a.multiply(8, 1);
    o.delta2 = a;
  }
  return o;
}

namespace {

HomPoly quotient(const HomPoly& num, const HomPoly& den, const std::string& what) {
  auto q = divide_exact(num, den);
  if (!q) throw Error(ErrorKind::DivisionFailure, what + " is not divisible as claimed");
  return *q;
}

}  // namespace

std::pair<Syzygy, Syzygy> family_syzygies(FamilyKind kind, int d) {
  const Curve curve(generate(kind, d));
  const HomPoly& fx = curve.partial(Var::x);
  const HomPoly& fy = curve.partial(Var::y);
  const HomPoly& fz = curve.partial(Var::z);
  const int m = d / 2;
  const bool odd = d % 2 == 1;
  const HomPoly zero1(1);

  switch (kind) {
    case FamilyKind::C: {
      Syzygy rho1(curve, zero1, X(), Rational(-2) * Y());
      const HomPoly v = X() * Z() + Y() * Y();
      HomPoly a, b;
      if (odd) {
        a = Rational(-2 * m) * X() * v.pow(U(m - 1));
        b = Y().pow(U(2 * m - 1));
      } else {
        a = Rational(-2) * v.pow(U(m - 1));
        b = Y().pow(U(2 * m - 3)) * Z();
      }
      const HomPoly g = a * fx + b * fy;
      const HomPoly c = -quotient(g, fz, "g by f_z");
      return {rho1, Syzygy(curve, a, b, c)};
    }
    case FamilyKind::Cprime: {
      Syzygy rho1 = odd ? Syzygy(curve, Rational(2 * m) * X(), -Y(), Rational(-2 * (m + 1)) * Z())
                        : Syzygy(curve, X(), zero1, -Z());
      const HomPoly g = quotient(fy, X(), "f_y by x");
      const HomPoly h = quotient(fz, X(), "f_z by x");
      return {rho1, Syzygy(curve, HomPoly(d - 2), h, -g)};
    }
    case FamilyKind::Cdoubleprime:
      return {Syzygy(curve, X(), zero1, -Z()), Syzygy(curve, fy, -fx, HomPoly(d - 1))};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family");
}

bool VerificationReport::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

namespace {

std::string str(long v) { return std::to_string(v); }
std::string str(const std::string& s) { return s; }
std::string str(const Classification& c) { return to_string(c); }
std::string str(const SpectrumMultiset& s) { return to_string(s); }
std::string str(const CycloPoly& p) { return to_string(p); }
std::string str(const std::vector<long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

class Recorder {
 public:
  explicit Recorder(VerificationReport& rep) : rep_(rep) {}

  template <class T>
  void compare(const std::string& name, const T& expected, const T& computed) {
    rep_.claims.push_back({name, str(expected), str(computed), expected == computed});
  }
  void check(const std::string& name, const std::string& expected, const std::string& computed,
             bool ok) {
    rep_.claims.push_back({name, expected, computed, ok});
  }
  void info(const std::string& name, const std::string& value) { rep_.info.emplace_back(name, value); }

  // Runs body; an exception becomes a failed claim with the error as computed value.
  bool guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
      return true;
    } catch (const Error& e) {
      check(name, "no error", e.what(), false);
    } catch (const std::exception& e) {
      check(name, "no error", e.what(), false);
    }
    return false;
  }

 private:
  VerificationReport& rep_;
};

std::string points_string(const std::vector<SingularPoint>& pts) {
  std::string out;
  for (const auto& p : pts) out += (out.empty() ? "" : " ") + to_string(p.coords);
  return out.empty() ? "none" : out;
}

}  // namespace

VerificationReport verify(FamilyKind kind, int d) {
  VerificationReport rep;
  rep.kind = kind;
  rep.d = d;
  Recorder rec(rep);

  std::optional<FamilyOracle> orc;
  if (!rec.guard("oracle", [&] { orc = oracle(kind, d); })) return rep;
  const HomPoly& f = orc->f;
  rec.info("f", to_string(f));
  rec.check("reduced", "true", squarefree_check(f) ? "true" : "false", squarefree_check(f));

  std::optional<Curve> curve;
  if (!rec.guard("curve", [&] { curve.emplace(f); })) return rep;

  // Syzygies, tau and the freeness class.
  int r = -1;
  long tau = -1;
  rec.guard("mdr", [&] {
    r = mdr(*curve);
    rec.compare<long>("mdr", orc->mdr, r);
  });
  rec.guard("tau", [&] {
    tau = static_cast<long>(tjurina_total(*curve));
    rec.compare<long>("tau", orc->tau, tau);
  });
  if (r >= 0 && tau >= 0) {
    rec.guard("classification", [&] {
      rec.compare("classification", orc->classification,
                  classify(*curve, r, static_cast<std::size_t>(tau)));
    });
  }
  rec.guard("explicit syzygies", [&] {
    const auto [rho1, rho2] = family_syzygies(kind, d);
    rec.compare<long>("rho1 degree", orc->mdr, rho1.degree());
    const bool indep = !is_multiple(rho2, rho1);
    rec.check("rho2 not a multiple of rho1", "true", indep ? "true" : "false", indep);
    if (kind != FamilyKind::Cdoubleprime) {
      const HomPoly det = saito_determinant(rho1, rho2);
      bool ok = false;
      std::string got = "det = " + to_string(det);
      if (!det.is_zero() && det.degree() == d) {
        const Rational c = det.leading_coefficient() / f.leading_coefficient();
        ok = det == c * f;
        if (ok) got = "det = " + to_string(c) + " * f";
      }
      rec.check("Saito determinant of explicit syzygies", "nonzero multiple of f", got, ok);
    }
  });

  // Singularities.
  long mu = -1;
  rec.guard("singular points", [&] {
    SingularLocus locus = singular_points(*curve);
    rec.check("singular locus complete", "true", locus.complete ? "true" : "false", locus.complete);
    rec.compare("singular points", points_string(orc->singular_points), points_string(locus.points));
    long total = 0;
    for (auto& p : locus.points) {
      p.milnor = milnor_local(*curve, p.coords);
      total += *p.milnor;
      for (const auto& q : orc->singular_points) {
        if (q.coords == p.coords && q.milnor) {
          rec.compare<long>("mu at " + to_string(p.coords), *q.milnor, *p.milnor);
        }
      }
      rec.info("mu at " + to_string(p.coords), str(*p.milnor));
    }
    if (locus.complete) {
      mu = total;
      rec.compare("mu", orc->mu, mu);
      if (tau >= 0) rec.compare<long>("mu - tau", orc->mu - orc->tau, mu - tau);
    }
  });

  // Complement of the curve.
  long chi = 0;
  long b1 = -1;
  if (mu >= 0) {
    rec.guard("complement", [&] {
      const ComplementData cd = complement_data(d, mu, orc->components);
      chi = cd.chi;
      b1 = cd.b1;
      rec.compare("chi(U)", orc->chi, cd.chi);
      rec.compare("b1(U)", orc->b1, cd.b1);
      rec.compare("b2(U)", orc->b2, cd.b2);
    });
  }

  // Kernel dimensions, spectrum and Alexander polynomials.
  std::vector<long> njs;
  rec.guard("n_j", [&] {
    for (int j = 1; j <= d - 3; ++j) njs.push_back(static_cast<long>(nj(*curve, j)));
    rec.compare("n_j (j=1..d-3)", orc->nj, njs);
  });
  if (b1 >= 0 && static_cast<int>(njs.size()) == std::max(d - 3, 0)) {
    rec.guard("spectrum", [&] {
      const SpectrumMultiset sp = spectrum(njs, d, b1);
      rec.compare("spectrum", orc->spectrum, sp);
      const CycloPoly alex = alexander(eigenvalue_table(sp, d));
      if (orc->alexander) {
        rec.compare("Alexander polynomial (spectrum vs closed form)", *orc->alexander, alex);
      } else {
        rec.info("Alexander polynomial", to_string(alex));
      }
      const CycloPoly del2 = delta2(alex, chi, d);
      if (orc->delta2) {
        rec.compare("Delta2", *orc->delta2, del2);
      } else {
        rec.info("Delta2", to_string(del2));
      }
      const auto [b1F, b2F] = milnor_fiber_betti(alex, chi, d);
      rec.info("b1(F)", str(b1F));
      if (orc->milnor_fiber_b2) {
        rec.compare("b2(F)", *orc->milnor_fiber_b2, b2F);
      } else {
        rec.info("b2(F)", str(b2F));
      }
    });
  }

  // Eigenforms.
  for (int k = 3; k <= d - 1; ++k) {
    const std::string name = "eigenforms k=" + std::to_string(k);
    rec.guard(name, [&] {
      const auto forms = eigenbasis(kind, d, k);
      rec.compare<long>(name + " count", orc->nj[k - 3], static_cast<long>(forms.size()));
      bool pde = true;
      for (const auto& ef : forms) pde = pde && multiplier_pde(kind, ef.h).is_zero();
      rec.check(name + " multiplier PDE", "0", pde ? "0" : "nonzero", pde);
    });
  }
  if (kind == FamilyKind::Cprime && d % 2 == 1) {
    const int m = d / 2;
    rec.guard("weighted Euler kernel", [&] {
      std::size_t worst = 0;
      for (int e = 0; e < 2 * m - 2; ++e) worst = std::max(worst, weighted_euler_kernel_dim(m, e));
      rec.compare<long>("weighted Euler operator kernel on S_e, e < 2m-2", 0, static_cast<long>(worst));
    });
  }
  return rep;
}

std::string to_table(const VerificationReport& rep) {
  std::size_t w = 5;
  for (const auto& c : rep.claims) w = std::max(w, c.name.size());
  std::ostringstream os;
  os << "family " << to_string(rep.kind) << " degree " << rep.d << ": "
     << (rep.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : rep.claims) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << std::string(w - c.name.size() + 2, ' ')
       << "expected " << c.expected << "  computed " << c.computed << "\n";
  }
  for (const auto& [k, v] : rep.info) os << "  info  " << k << ": " << v << "\n";
  return os.str();
}

}  // namespace plc
