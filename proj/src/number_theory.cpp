#include <kgenus/number_theory.hpp>

#include <stdexcept>

namespace kgenus {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

bool is_odd_prime(std::uint64_t n) { return n != 2 && is_prime(n); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("pow_mod: modulus must be positive");
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = static_cast<std::uint64_t>(u128{result} * base % m);
    base = static_cast<std::uint64_t>(u128{base} * base % m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t residue(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("residue: modulus must be positive");
  const std::uint64_t r = magnitude(a) % m;
  return (a < 0 && r != 0) ? m - r : r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t bound) {
  auto out = primes_up_to(bound);
  if (!out.empty()) out.erase(out.begin());
  return out;
}

std::vector<std::uint64_t> distinct_prime_factors(std::int64_t n) {
  std::vector<std::uint64_t> out;
  std::uint64_t m = magnitude(n);
  for (std::uint64_t d = 2; d <= m / d; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace kgenus
