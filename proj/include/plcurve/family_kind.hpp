#pragma once

#include <string>
#include <string_view>

namespace plc {

// C:   x^{2m} + (xz+y^2)^m, times x when d = 2m+1
// C':  xz[(xz)^{m-1} + y^{2m-2}] for d = 2m, x[(xz)^m + y^{2m}] for d = 2m+1
// C'': (xz)^m + y^{2m}, times y when d = 2m+1
enum class FamilyKind { C, Cprime, Cdoubleprime };

// "C", "Cprime", "Cdoubleprime"
std::string to_string(FamilyKind kind);

// Accepts the names above and the short forms C', C''; InvalidArgument otherwise.
FamilyKind parse_family_kind(std::string_view name);

}  // namespace plc
