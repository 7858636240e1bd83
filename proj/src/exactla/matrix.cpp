#include "plcurve/exactla/matrix.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "detail/modp.hpp"
#include "plcurve/algebra/upoly.hpp"
#include "plcurve/error.hpp"

namespace plc {

using detail::u64;

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) {
    throw Error(ErrorKind::InvalidArgument, "matrix entry count does not match its shape");
  }
  for (auto& e : a_) e.canonicalize();
}

Vector ExactMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length does not match columns");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& e = a_[i * cols_ + j];
      if (e != 0 && v[j] != 0) out[i] += e * v[j];
    }
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

namespace {

// Integer matrix with sparse rows; each row of the source is multiplied by the
// lcm of its denominators, which changes neither rank nor right kernel.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> row;
};

IntMatrix to_int(const ExactMatrix& m) {
  IntMatrix out{m.rows(), m.cols(), {}};
  out.row.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& e = m(i, j);
      if (e != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& e = m(i, j);
      if (e == 0) continue;
      Integer v = e.get_num() * (l / e.get_den());
      out.row[i].emplace_back(j, std::move(v));
    }
  }
  return out;
}

// Barrett reduction modulo p < 2^31 for any 64-bit x.
struct Field {
  u64 p;
  u64 m;  // floor((2^64 - 1) / p)
  explicit Field(u64 prime) : p(prime), m(~u64{0} / prime) {}
  u64 reduce(u64 x) const {
    const u64 q = static_cast<u64>((static_cast<unsigned __int128>(x) * m) >> 64);
    u64 r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }
};

struct ModRref {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<u64> a;  // rank x cols, reduced row echelon form
};

ModRref rref_mod(const IntMatrix& A, u64 p) {
  const Field F(p);
  const std::size_t m = A.rows;
  const std::size_t n = A.cols;
  std::vector<u64> a(m * n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& [j, v] : A.row[i]) a[i * n + j] = detail::reduce(v, p);
  }
  ModRref out;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv * n + c] == 0) ++piv;
    if (piv == m) continue;
    if (piv != r) std::swap_ranges(a.begin() + piv * n, a.begin() + piv * n + n, a.begin() + r * n);
    u64* prow = a.data() + r * n;
    const u64 inv = detail::invmod(prow[c], p);
    nz.clear();
    prow[c] = 1;
    for (std::size_t j = c + 1; j < n; ++j) {
      if (prow[j] != 0) {
        prow[j] = F.reduce(prow[j] * inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      u64* row = a.data() + i * n;
      const u64 f = row[c];
      if (f == 0) continue;
      row[c] = 0;
      const u64 nf = p - f;
      for (std::size_t j : nz) row[j] = F.reduce(row[j] + nf * prow[j]);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  a.resize(r * n);
  out.a = std::move(a);
  return out;
}

std::vector<std::size_t> free_columns(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::vector<std::size_t> free;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (k < pivots.size() && pivots[k] == j) {
      ++k;
    } else {
      free.push_back(j);
    }
  }
  return free;
}

bool better_signature(const ModRref& a, const ModRref& b) {
  if (a.rank != b.rank) return a.rank > b.rank;
  return a.pivots < b.pivots;
}

bool is_kernel_vector(const IntMatrix& A, const std::vector<Integer>& v) {
  Integer acc;
  for (const auto& row : A.row) {
    acc = 0;
    for (const auto& [j, e] : row) {
      if (v[j] != 0) acc += e * v[j];
    }
    if (acc != 0) return false;
  }
  return true;
}

struct KernelResult {
  std::size_t rank = 0;
  std::vector<Vector> basis;
};

// Multimodular right kernel. The reduced form modulo each prime fixes a pivot
// signature; the kernel entries of primes sharing the best signature are
// combined by CRT and recovered by rational reconstruction. A candidate basis
// that multiplies to zero exactly certifies both the rank and the pivot set,
// because its support already has the echelon shape.
std::optional<KernelResult> multimodular_kernel(const IntMatrix& A, bool want_basis) {
  const std::size_t n = A.cols;
  std::optional<ModRref> best;
  std::vector<std::size_t> free;
  std::vector<Integer> acc;  // rank x |free|, kernel entries at pivot coordinates
  Integer modulus;
  std::size_t used = 0;
  std::size_t next_attempt = 1;

  for (std::size_t pi = 0; pi < detail::kPrimeCount; ++pi) {
    const u64 p = detail::large_prime(pi);
    ModRref res = rref_mod(A, p);
    const std::size_t r = res.rank;
    if (!best || better_signature(res, *best)) {
      free = free_columns(res.pivots, n);
      acc.assign(r * free.size(), Integer(0));
      modulus = 1;
      used = 0;
      next_attempt = 1;
      best = std::move(res);
      if (free.empty()) return KernelResult{r, {}};
    } else if (res.rank != best->rank || res.pivots != best->pivots) {
      continue;
    }
    // Fold this prime into the CRT accumulator.
    const ModRref& cur = (used == 0) ? *best : res;
    const u64 minv = used == 0 ? 0 : detail::invmod(detail::reduce(modulus, p), p);
    Integer t;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < free.size(); ++k) {
        const u64 e = cur.a[i * n + free[k]];
        const u64 val = e == 0 ? 0 : p - e;
        Integer& x = acc[i * free.size() + k];
        if (used == 0) {
          x = static_cast<unsigned long>(val);
          continue;
        }
        const u64 xr = detail::reduce(x, p);
        const u64 h = detail::mulmod(detail::submod(val, xr, p), minv, p);
        if (h != 0) {
          t = modulus * static_cast<unsigned long>(h);
          x += t;
        }
      }
    }
    modulus *= static_cast<unsigned long>(p);
    ++used;
    if (used < next_attempt) continue;
    next_attempt *= 2;

    Integer bound;
    {
      Integer half = (modulus - 1) / 2;
      mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    }
    bool ok = true;
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < free.size() && ok; ++k) {
      Vector v(n);
      v[free[k]] = 1;
      for (std::size_t i = 0; i < r; ++i) {
        const Integer& x = acc[i * free.size() + k];
        if (x == 0) continue;
        Rational q;
        if (!rational_reconstruct(x, modulus, bound, bound, q)) {
          ok = false;
          break;
        }
        v[best->pivots[i]] = q;
      }
      if (!ok) break;
      Vector iv = primitive_integer_vector(v);
      std::vector<Integer> ints(n);
      for (std::size_t j = 0; j < n; ++j) ints[j] = iv[j].get_num();
      if (!is_kernel_vector(A, ints)) {
        ok = false;
        break;
      }
      if (want_basis) basis.push_back(std::move(iv));
    }
    if (ok) return KernelResult{r, std::move(basis)};
  }
  return std::nullopt;
}

// Integer Gauss-Jordan with the content removed from every updated row.
struct IntRref {
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Integer>> rows;
};

IntRref rref_fraction_free(const ExactMatrix& m) {
  const IntMatrix A = to_int(m);
  const std::size_t n = A.cols;
  std::vector<std::vector<Integer>> a(A.rows, std::vector<Integer>(n));
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (const auto& [j, v] : A.row[i]) a[i][j] = v;
  }
  IntRref out;
  std::size_t r = 0;
  Integer g, mr, mi, content;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
      mr = a[i][c] / g;
      mi = a[r][c] / g;
      content = 0;
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = mi * a[i][j] - mr * a[r][j];
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a[i][j].get_mpz_t());
      }
      if (content > 1) {
        for (auto& e : a[i]) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), content.get_mpz_t());
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

}  // namespace

std::vector<Vector> kernel_basis_fraction_free(const ExactMatrix& m) {
  const IntRref rr = rref_fraction_free(m);
  std::vector<Vector> basis;
  for (std::size_t f : free_columns(rr.pivots, m.cols())) {
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      const Integer& e = rr.rows[i][f];
      if (e != 0) v[rr.pivots[i]] = -make_rational(e, rr.rows[i][rr.pivots[i]]);
    }
    basis.push_back(primitive_integer_vector(v));
  }
  return basis;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Certify on the side whose kernel is smaller.
  const IntMatrix A = to_int(m);
  const std::size_t rp = rref_mod(A, detail::large_prime(0)).rank;
  const bool use_transpose = (m.rows() - rp) < (m.cols() - rp);
  const auto res = use_transpose ? multimodular_kernel(to_int(m.transpose()), false)
                                 : multimodular_kernel(A, false);
  if (res) return res->rank;
  return rref_fraction_free(m).pivots.size();
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  if (m.cols() == 0) return {};
  if (m.rows() == 0) {
    std::vector<Vector> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Vector v(m.cols());
      v[j] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto res = multimodular_kernel(to_int(m), true);
  if (res) return std::move(res->basis);
  return kernel_basis_fraction_free(m);
}

std::size_t modp_prefilter(const ExactMatrix& m, std::uint64_t p) {
  if (p < 2 || p >= (u64{1} << 31) ||
      mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(p)).get_mpz_t(), 30) == 0) {
    throw Error(ErrorKind::BadPrime, std::to_string(p) + " is not a prime below 2^31");
  }
  IntMatrix A{m.rows(), m.cols(), {}};
  A.row.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& e = m(i, j);
      if (e == 0) continue;
      if (detail::reduce(e.get_den(), p) == 0) {
        throw Error(ErrorKind::BadPrime, "denominator of entry (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ") vanishes modulo " +
                                             std::to_string(p));
      }
      A.row[i].emplace_back(j, Integer(static_cast<unsigned long>(detail::reduce(e, p))));
    }
  }
  return rref_mod(A, p).rank;
}

std::size_t bareiss_rank(const ExactMatrix& m) {
  const IntMatrix A = to_int(m);
  const std::size_t n = A.cols;
  std::vector<std::vector<Integer>> a(A.rows, std::vector<Integer>(n));
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (const auto& [j, v] : A.row[i]) a[i][j] = v;
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace plc
