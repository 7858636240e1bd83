#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "plcurve/algebra/rational.hpp"

namespace plc {

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  // Throws InvalidArgument unless entries.size() == rows * cols.
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const noexcept { return a_; }

  Vector apply(const Vector& v) const;
  ExactMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

inline constexpr std::uint64_t kDefaultPrefilterPrime = 1000003;

// Exact rank over Q.
std::size_t rank(const ExactMatrix& m);

// Basis of the right kernel: one vector per free column of the reduced row
// echelon form, free columns ascending, each scaled to integer entries with
// content 1 and first nonzero entry positive.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

// Rank of m reduced modulo the prime p, a lower bound for rank(m). Throws
// BadPrime when p is not a prime below 2^31 or divides a denominator.
std::size_t modp_prefilter(const ExactMatrix& m, std::uint64_t p = kDefaultPrefilterPrime);

// Dense fraction-free (Bareiss) elimination. Slow; kept as a reference.
std::size_t bareiss_rank(const ExactMatrix& m);

// Kernel by integer Gauss-Jordan elimination without any modular step. Same
// canonical basis as kernel_basis.
std::vector<Vector> kernel_basis_fraction_free(const ExactMatrix& m);

}  // namespace plc
