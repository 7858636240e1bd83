#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "plcurve/syzygy.hpp"

namespace plc {

enum class ClassKind { Free, NearlyFree, Neither, LinePencil };

std::string to_string(ClassKind k);

struct Classification {
  ClassKind kind = ClassKind::Neither;
  std::optional<int> d1;
  std::optional<int> d2;
  friend bool operator==(const Classification&, const Classification&) = default;
};

// "Free(1,4)", "NearlyFree(1,5)", "Neither", "LinePencil"
std::string to_string(const Classification& c);

using Point = std::array<Rational, 3>;

// "(0:0:1)"
std::string to_string(const Point& p);

struct SingularPoint {
  Point coords;  // integer, content 1, first nonzero positive
  std::optional<int> milnor;
};

struct SingularLocus {
  std::vector<SingularPoint> points;  // sorted by coordinates
  // False when some candidate could not be resolved over Q; the notes say
  // where.
  bool complete = true;
  std::vector<std::string> unresolved;
};

struct ComplementData {
  long chi = 0;
  long b0 = 1;
  long b1 = 0;
  long b2 = 0;
  int components = 1;
};

// dim (S/J_f)_k.
std::size_t hilbert_jacobian(const Curve& curve, int k);
std::size_t hilbert_jacobian(const HomPoly& f, int k);

// Total Tjurina number from the Hilbert function at 3d-6, 3d-5, 3d-4. Smooth
// curves (zero at 3d-5 and 3d-4) give 0; otherwise the three values must agree
// or NotStabilized is thrown.
std::size_t tjurina_total(const Curve& curve);
std::size_t tjurina_total(const HomPoly& f);

// Singular points with rational coordinates; Milnor numbers are not filled in.
SingularLocus singular_points(const Curve& curve);
SingularLocus singular_points(const HomPoly& f);

// Canonical representative of a projective point; InvalidArgument for (0,0,0).
Point normalize_point(const Point& p);

// Local Milnor number at p as the order at u = 0 of Res_v of the sheared
// partials of a local equation.
int milnor_local(const Curve& curve, const Point& p);
int milnor_local(const HomPoly& f, const Point& p);

// Sum of local Milnor numbers; IncompleteSingularLocus when the locus has
// unresolved candidates.
long milnor_total(const Curve& curve);
long milnor_total(const HomPoly& f);

// Freeness test from mdr and tau. A Free verdict is cross-checked against
// free_certificate (CertificateMismatch on failure).
Classification classify(const Curve& curve);
Classification classify(const HomPoly& f);
Classification classify(const Curve& curve, int mdr_value, std::size_t tau);

long chi_complement(int d, long mu);

// NegativeBetti when b2 would be negative.
ComplementData complement_data(int d, long mu, int components);

}  // namespace plc
