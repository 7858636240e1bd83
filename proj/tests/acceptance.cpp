// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every comparison is exact (integers, rationals, factored cyclotomic
// products), so the tolerance is zero throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plcurve/algebra/gcd.hpp"
#include "plcurve/derham.hpp"
#include "plcurve/exactla/matrix.hpp"
#include "plcurve/families.hpp"
#include "plcurve/invariants.hpp"
#include "plcurve/syzygy.hpp"
#include "plcurve/topology.hpp"

using namespace plc;

namespace {

constexpr long kTolerance = 0;  // exact arithmetic only

const FamilyKind kAll[] = {FamilyKind::C, FamilyKind::Cprime, FamilyKind::Cdoubleprime};

// Collects the first few mismatches for the FAIL line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  template <class T, class U>
  void eq(const T& expected, const U& computed, const std::string& what) {
    std::ostringstream s;
    s << what << ": expected " << expected << ", got " << computed;
    expect(expected == computed, s.str());
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(count_) + " checks";
    return std::to_string(failed_) + "/" + std::to_string(count_) + " failed: " + notes_;
  }

 private:
  long count_ = 0;
  long failed_ = 0;
  std::string notes_;
};

std::string tag(FamilyKind k, int d) { return to_string(k) + "_" + std::to_string(d); }

std::ostream& operator<<(std::ostream& os, const Classification& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const CycloPoly& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const SpectrumMultiset& s) { return os << to_string(s); }

long floor_half(long n) { return n / 2; }
long ceil_half(long n) { return (n + 1) / 2; }

bool nj_vanishes(FamilyKind k, int d) { return k == FamilyKind::Cprime && d % 2 == 1; }

long expected_nj(FamilyKind k, int d, int j) { return nj_vanishes(k, d) ? 0 : (j + 1) / 2; }

long expected_b1(FamilyKind k, int d) {
  switch (k) {
    case FamilyKind::C: return floor_half(d) - (d % 2 == 0 ? 1 : 0);
    case FamilyKind::Cprime: return floor_half(d);
    case FamilyKind::Cdoubleprime: return floor_half(d - 1);
  }
  return 0;
}

CycloPoly t_power_minus_one(int d, long power) {
  CycloPoly p;
  for (int n = 1; n <= d; ++n) {
    if (d % n == 0) p.multiply(n, power);
  }
  return p;
}

// Everything downstream of the computed kernel dimensions and singular data.
struct Computed {
  long mu = 0;
  ComplementData comp;
  std::vector<long> nj;
  SpectrumMultiset spectrum;
  CycloPoly alexander;
};

Computed compute(FamilyKind k, int d) {
  const Curve c(generate(k, d));
  Computed out;
  out.mu = milnor_total(c);
  out.comp = complement_data(d, out.mu, components(k, d));
  for (int j = 1; j <= d - 3; ++j) out.nj.push_back(static_cast<long>(nj(c, j)));
  out.spectrum = spectrum(out.nj, d, out.comp.b1);
  out.alexander = alexander(eigenvalue_table(out.spectrum, d));
  return out;
}

std::map<std::pair<FamilyKind, int>, Computed>& cache() {
  static std::map<std::pair<FamilyKind, int>, Computed> c;
  return c;
}

const Computed& computed(FamilyKind k, int d) {
  auto it = cache().find({k, d});
  if (it == cache().end()) it = cache().emplace(std::pair{k, d}, compute(k, d)).first;
  return it->second;
}

void guarded(Check& ck, const std::string& where, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ck.expect(false, where + ": " + e.what());
  }
}

void freeness(Check& ck) {
  for (FamilyKind k : {FamilyKind::C, FamilyKind::Cprime}) {
    for (int d = 3; d <= 12; ++d) {
      guarded(ck, tag(k, d), [&] {
        const Curve c(generate(k, d));
        ck.eq(Classification{ClassKind::Free, 1, d - 2}, classify(c), tag(k, d));
        ck.eq((d - 1) * (d - 1) - (d - 2), static_cast<long>(tjurina_total(c)), tag(k, d) + " tau");
      });
    }
    for (int d = 13; d <= 20; ++d) {
      guarded(ck, tag(k, d), [&] {
        const Curve c(generate(k, d));
        ck.eq(1, mdr(c), tag(k, d) + " mdr");
        ck.eq((d - 1) * (d - 1) - (d - 2), static_cast<long>(tjurina_total(c)), tag(k, d) + " tau");
      });
    }
  }
}

void near_freeness(Check& ck) {
  for (int d = 3; d <= 12; ++d) {
    const FamilyKind k = FamilyKind::Cdoubleprime;
    guarded(ck, tag(k, d), [&] {
      const Curve c(generate(k, d));
      ck.eq(Classification{ClassKind::NearlyFree, 1, d - 1}, classify(c), tag(k, d));
      ck.eq((d - 1) * (d - 1) - (d - 2) - 1, static_cast<long>(tjurina_total(c)), tag(k, d) + " tau");
    });
  }
  for (int d = 13; d <= 20; ++d) {
    const FamilyKind k = FamilyKind::Cdoubleprime;
    guarded(ck, tag(k, d), [&] {
      const Curve c(generate(k, d));
      ck.eq(1, mdr(c), tag(k, d) + " mdr");
      ck.eq((d - 1) * (d - 1) - (d - 2) - 1, static_cast<long>(tjurina_total(c)), tag(k, d) + " tau");
    });
  }
}

void milnor_numbers(Check& ck) {
  const Point origin = {Rational(0), Rational(0), Rational(1)};
  for (int d = 3; d <= 10; ++d) {
    guarded(ck, tag(FamilyKind::C, d), [&] {
      ck.eq((d - 1) * (d - 1) - floor_half(d), static_cast<long>(milnor_local(generate(FamilyKind::C, d), origin)),
            tag(FamilyKind::C, d));
    });
  }
}

void mu_tau(Check& ck) {
  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 12; ++d) {
      guarded(ck, tag(k, d), [&] {
        const long mu = computed(k, d).mu;
        const long tau = static_cast<long>(tjurina_total(generate(k, d)));
        long gap = 0;
        if (k == FamilyKind::C && d >= 5) gap = ceil_half(d) - 2;
        ck.eq(gap, mu - tau, tag(k, d) + " mu-tau");
      });
    }
  }
}

void complement(Check& ck) {
  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 12; ++d) {
      guarded(ck, tag(k, d), [&] {
        const ComplementData& c = computed(k, d).comp;
        long chi = 0, b1 = expected_b1(k, d), b2 = 0;
        switch (k) {
          case FamilyKind::C:
            chi = 2 - d + floor_half(d);
            break;
          case FamilyKind::Cprime:
            b2 = floor_half(d) - 1;
            break;
          case FamilyKind::Cdoubleprime:
            chi = 1;
            b2 = floor_half(d - 1);
            break;
        }
        ck.eq(chi, c.chi, tag(k, d) + " chi");
        ck.eq(b1, c.b1, tag(k, d) + " b1");
        ck.eq(b2, c.b2, tag(k, d) + " b2");
      });
    }
  }
}

void kernel_dims(Check& ck) {
  for (FamilyKind k : kAll) {
    for (int d = 4; d <= 12; ++d) {
      guarded(ck, tag(k, d), [&] {
        const auto& nj = computed(k, d).nj;
        for (int j = 1; j <= d - 3; ++j) {
          ck.eq(expected_nj(k, d, j), nj[j - 1], tag(k, d) + " n_" + std::to_string(j));
        }
      });
    }
  }
}

void spectra(Check& ck) {
  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 12; ++d) {
      guarded(ck, tag(k, d), [&] {
        SpectrumMultiset want;
        for (int j = 3; j <= d - 1; ++j) {
          const long m = expected_nj(k, d, j - 2);
          want.add(1 + make_rational(j, d), m);
          want.add(3 - make_rational(j, d), m);
        }
        want.add(Rational(2), expected_b1(k, d));
        ck.eq(want, computed(k, d).spectrum, tag(k, d));
      });
    }
  }
}

void alexander_two_paths(Check& ck) {
  for (int d = 3; d <= 11; d += 2) {
    guarded(ck, tag(FamilyKind::C, d), [&] {
      const long chi = 2 - d + floor_half(d);
      CycloPoly want = t_power_minus_one(d, -chi);
      want.multiply(1, 1);
      ck.eq(want, computed(FamilyKind::C, d).alexander, tag(FamilyKind::C, d));
    });
  }
  for (int d = 3; d <= 11; d += 2) {
    guarded(ck, tag(FamilyKind::Cprime, d), [&] {
      CycloPoly want;
      want.multiply(1, floor_half(d));
      ck.eq(want, computed(FamilyKind::Cprime, d).alexander, tag(FamilyKind::Cprime, d));
    });
  }
}

void second_polynomial(Check& ck) {
  const std::pair<int, CycloPoly> cases[] = {
      {6, [] { CycloPoly p; p.multiply(2, 1); p.multiply(6, 1); return p; }()},
      {8, [] { CycloPoly p; p.multiply(8, 1); return p; }()}};
  for (const auto& [d, want] : cases) {
    guarded(ck, tag(FamilyKind::C, d), [&] {
      const Computed& c = computed(FamilyKind::C, d);
      ck.eq(want, delta2(c.alexander, c.comp.chi, d), tag(FamilyKind::C, d));
    });
  }
}

void de_rham(Check& ck) {
  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 10; ++d) {
      const HomPoly f = generate(k, d);
      for (int k3 = 3; k3 <= d - 1; ++k3) {
        const std::string where = tag(k, d) + " k=" + std::to_string(k3);
        guarded(ck, where, [&] {
          const auto forms = eigenbasis(k, d, k3);
          ck.eq(static_cast<long>(nj(f, k3 - 2)), static_cast<long>(forms.size()), where + " count");
          for (const auto& ef : forms) {
            ck.expect(d2(ef.parent).is_zero(), where + " d(omega) != 0");
            ck.expect(wedge_df(f, ef.parent).is_zero(), where + " df^omega != 0");
            ck.expect(multiplier_pde(k, ef.h).is_zero(), where + " multiplier PDE");
          }
        });
      }
    }
  }
}

HomPoly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  HomPoly::Terms terms;
  for (const auto& m : monomial_basis(degree)) {
    const int c = coeff(rng);
    if (c != 0) terms.emplace(m, c);
  }
  return HomPoly(degree, std::move(terms));
}

void properties(Check& ck) {
  std::mt19937 rng(20240611);
  const HomPoly x = HomPoly::variable(Var::x), y = HomPoly::variable(Var::y), z = HomPoly::variable(Var::z);
  for (int i = 0; i < 200; ++i) {
    const int deg = 1 + i % 9;
    const HomPoly f = random_poly(rng, deg);
    const HomPoly euler = x * partial(f, Var::x) + y * partial(f, Var::y) + z * partial(f, Var::z);
    ck.expect(euler == Rational(deg) * f, "Euler identity, sample " + std::to_string(i));
  }

  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 8; ++d) {
      const Curve c(generate(k, d));
      for (int r = 0; r <= d; ++r) {
        const ExactMatrix m = jacobian_map_matrix(c, r);
        const auto ker = kernel_basis(m);
        ck.eq(m.cols(), rank(m) + ker.size(), tag(k, d) + " rank-nullity r=" + std::to_string(r));
      }
    }
  }

  for (FamilyKind k : kAll) {
    for (int d = 3; d <= 12; ++d) {
      guarded(ck, tag(k, d), [&] {
        const Curve c(generate(k, d));
        if (classify(c).kind != ClassKind::Free) return;
        const auto cert = free_certificate(c);
        ck.expect(cert.has_value(), tag(k, d) + " no certificate");
        if (!cert) return;
        ck.expect(cert->scale != 0, tag(k, d) + " zero scale");
        ck.expect(saito_determinant(cert->rho1, cert->rho2) == cert->scale * c.f(),
                  tag(k, d) + " Saito determinant");
      });
    }
  }

  std::mt19937 rng2(7);
  int sampled = 0;
  while (sampled < 20) {
    const int deg = sampled < 10 ? 4 : 5;
    const HomPoly f = random_poly(rng2, deg);
    if (f.degree() != deg || f.is_zero() || !squarefree_check(f)) continue;
    ++sampled;
    const Curve c(f);
    for (int r = 0; r <= deg; ++r) {
      const ExactMatrix m = jacobian_map_matrix(c, r);
      const std::size_t brute = m.cols() - bareiss_rank(m);
      ck.eq(brute, ar_slice(c, r).dim(), "random " + to_string(f) + " r=" + std::to_string(r));
    }
  }
}

void fiber_betti(Check& ck) {
  for (int d = 5; d <= 11; d += 2) {
    guarded(ck, tag(FamilyKind::C, d), [&] {
      const Computed& c = computed(FamilyKind::C, d);
      ck.eq(0L, milnor_fiber_betti(c.alexander, c.comp.chi, d).second, tag(FamilyKind::C, d) + " b2(F)");
    });
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {1, "freeness of C and C' (d=3..12; tau, mdr to 20)", freeness},
      {2, "near-freeness of C'' (d=3..12; tau, mdr to 20)", near_freeness},
      {3, "Milnor number of C_d at (0:0:1) (d=3..10)", milnor_numbers},
      {4, "mu versus tau (d=3..12)", mu_tau},
      {5, "complement topology (d=3..12)", complement},
      {6, "kernel dimensions n_j (d=3..12)", kernel_dims},
      {7, "spectra (d=3..12)", spectra},
      {8, "Alexander polynomial, two paths", alexander_two_paths},
      {9, "second characteristic polynomial of C_6, C_8", second_polynomial},
      {10, "de Rham eigenforms (d<=10)", de_rham},
      {11, "property suites", properties},
      {12, "b2(F) = 0 for C_d, d = 5,7,9,11", fiber_betti},
  };
  static_assert(kTolerance == 0);
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& c : criteria) {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    guarded(ck, "criterion", [&] { c.run(ck); });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && ck.ok();
    std::printf("%s %2d %s [%s, %.1fs]\n", ck.ok() ? "PASS" : "FAIL", c.id, c.name, ck.summary().c_str(), secs);
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s acceptance (%.1fs)\n", all ? "PASS" : "FAIL", total);
  return all ? 0 : 1;
}
