#include "detail/modp.hpp"

namespace plc::detail {
namespace {

std::vector<u64> make_primes() {
  std::vector<u64> primes;
  primes.reserve(kPrimeCount);
  mpz_class candidate = 2147483647;
  primes.push_back(candidate.get_ui());
  while (primes.size() < kPrimeCount) {
    do {
      candidate -= 2;
    } while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0);
    primes.push_back(candidate.get_ui());
  }
  return primes;
}

}  // namespace

u64 large_prime(std::size_t i) {
  static const std::vector<u64> primes = make_primes();
  return primes.at(i);
}

}  // namespace plc::detail
