#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plcurve/family_kind.hpp"
#include "plcurve/invariants.hpp"
#include "plcurve/topology.hpp"

namespace plc {

// Expanded generator; BadDegree for d < 3.
HomPoly generate(FamilyKind kind, int d);

// Number of irreducible components over C.
int components(FamilyKind kind, int d);

// Expected invariants, all from closed forms in d.
struct FamilyOracle {
  FamilyKind kind = FamilyKind::C;
  int d = 0;
  HomPoly f;
  int components = 1;
  int mdr = 1;
  Classification classification;
  long tau = 0;
  long mu = 0;
  long chi = 0;
  long b1 = 0;
  long b2 = 0;
  std::vector<long> nj;  // n_1 .. n_{d-3}
  SpectrumMultiset spectrum;
  std::optional<CycloPoly> alexander;
  std::optional<CycloPoly> delta2;
  std::optional<long> milnor_fiber_b2;
  std::vector<SingularPoint> singular_points;  // milnor set where known
};

FamilyOracle oracle(FamilyKind kind, int d);

// Explicit generators of the syzygy module, built by exact division
// (for C'' the second one is the Koszul relation (f_y, -f_x, 0)).
// DivisionFailure if a quotient that should be exact is not.
std::pair<Syzygy, Syzygy> family_syzygies(FamilyKind kind, int d);

struct Claim {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  FamilyKind kind = FamilyKind::C;
  int d = 0;
  std::vector<Claim> claims;
  // Computed values with no closed form to compare against.
  std::vector<std::pair<std::string, std::string>> info;

  bool passed() const;
};

// Compares every computed invariant with the oracle. Exceptions raised along
// the way become failed claims.
VerificationReport verify(FamilyKind kind, int d);

// Fixed-width PASS/FAIL table.
std::string to_table(const VerificationReport& rep);

}  // namespace plc
