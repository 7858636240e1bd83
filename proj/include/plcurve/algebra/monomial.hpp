#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace plc {

enum class Var { x = 0, y = 1, z = 2 };

inline constexpr Var kVars[] = {Var::x, Var::y, Var::z};

char var_name(Var v) noexcept;

// x^ex * y^ey * z^ez
struct Monomial {
  int ex = 0;
  int ey = 0;
  int ez = 0;

  constexpr int degree() const noexcept { return ex + ey + ez; }
  constexpr int exponent(Var v) const noexcept {
    return v == Var::x ? ex : (v == Var::y ? ey : ez);
  }
  constexpr Monomial operator*(const Monomial& o) const noexcept {
    return {ex + o.ex, ey + o.ey, ez + o.ez};
  }
  constexpr bool divides(const Monomial& o) const noexcept {
    return ex <= o.ex && ey <= o.ey && ez <= o.ez;
  }
  constexpr Monomial operator/(const Monomial& o) const noexcept {
    return {ex - o.ex, ey - o.ey, ez - o.ez};
  }
  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  static constexpr Monomial of(Var v, int e = 1) noexcept {
    return v == Var::x ? Monomial{e, 0, 0}
                       : (v == Var::y ? Monomial{0, e, 0} : Monomial{0, 0, e});
  }
};

// Graded lexicographic order with x > y > z.
constexpr std::strong_ordering grlex_compare(const Monomial& a,
                                             const Monomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.ex <=> b.ex; c != 0) return c;
  return a.ey <=> b.ey;
}

// Comparator placing larger monomials first; maps keyed by it iterate from
// the leading term down.
struct GrlexGreater {
  constexpr bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grlex_compare(a, b) > 0;
  }
};

// dim S_k; zero for negative k.
constexpr std::size_t dim_S(int k) noexcept {
  return k < 0 ? 0 : static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(k + 2) / 2;
}

// Position of m inside monomial_basis(m.degree()).
constexpr std::size_t grlex_index(const Monomial& m) noexcept {
  const auto k = static_cast<std::size_t>(m.degree());
  const auto rest = k - static_cast<std::size_t>(m.ex);
  return rest * (rest + 1) / 2 + (rest - static_cast<std::size_t>(m.ey));
}

// All monomials of total degree k, strictly decreasing in grlex order.
std::vector<Monomial> monomial_basis(int k);

// "x^2*y*z", "1" for the unit monomial.
std::string to_string(const Monomial& m);

}  // namespace plc
