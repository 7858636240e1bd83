#pragma once

// Word-size prime field arithmetic shared by the modular algorithms.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace plc::detail {

using u64 = std::uint64_t;

// Requires p < 2^32 so that products fit in 64 bits.
inline u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 addmod(u64 a, u64 b, u64 p) { a += b; return a >= p ? a - p : a; }
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1u;
  }
  return r;
}

// p prime.
inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline u64 reduce(const mpz_class& n, u64 p) {
  return mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(p));
}

// Residue of a rational; the caller guarantees p does not divide the
// denominator.
inline u64 reduce(const mpq_class& q, u64 p) {
  return mulmod(reduce(q.get_num(), p), invmod(reduce(q.get_den(), p), p), p);
}

// The i-th prime below 2^31 counting downwards from 2^31 - 1, i < kPrimeCount.
inline constexpr std::size_t kPrimeCount = 1024;
u64 large_prime(std::size_t i);

}  // namespace plc::detail
