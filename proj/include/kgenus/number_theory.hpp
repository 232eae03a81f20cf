#pragma once

// Small-integer arithmetic helpers: primality, modular powers, factorization.
// Inputs are machine integers; all intermediate products use 128-bit math.

#include <cstdint>
#include <vector>

namespace kgenus {

/// Deterministic trial division. Exact for every 64-bit input, but intended
/// for the small primes (<= ~10^6) this library sweeps over.
bool is_prime(std::uint64_t n);

bool is_odd_prime(std::uint64_t n);

/// base^exp mod m, m >= 1. Result lies in [0, m).
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Residue of a signed integer in [0, m), m >= 1.
std::uint64_t residue(std::int64_t a, std::uint64_t m);

/// Odd primes p with 3 <= p <= bound, ascending.
std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound);

/// Primes p with 2 <= p <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Distinct prime divisors of |n|, ascending. Empty for n = 0, +-1.
std::vector<std::uint64_t> distinct_prime_factors(std::int64_t n);

/// |n| as an unsigned value; well defined for INT64_MIN.
constexpr std::uint64_t magnitude(std::int64_t n) {
  return n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

}  // namespace kgenus
