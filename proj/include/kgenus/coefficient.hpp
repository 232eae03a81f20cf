#pragma once

// Scalar hooks used by the dense series kernel. Any scalar type with ring
// operators works; the overloads below give GMP integers their fast paths.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kgenus {

/// Exact integer coefficient of the power-series ring. Never overflows.
using Coefficient = mpz_class;

template <typename T>
concept RingScalar = requires(T a, const T b) {
  T{0};
  T{1};
  { a += b } -> std::same_as<T&>;
  { a -= b } -> std::same_as<T&>;
  { b * b };
  { b == b } -> std::convertible_to<bool>;
};

// acc += a * b
template <RingScalar T>
inline void add_product(T& acc, const T& a, const T& b) {
  acc += a * b;
}

inline void add_product(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

template <RingScalar T>
inline bool is_zero(const T& x) {
  return x == T{0};
}

inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

/// Residue of `a` in [0, m). `m` must be positive.
template <std::signed_integral T>
inline T floor_mod(const T& a, const T& m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  T r = a % m;
  return r < 0 ? r + m : r;
}

inline mpz_class floor_mod(const mpz_class& a, const mpz_class& m) {
  if (sgn(m) <= 0) throw std::invalid_argument("modulus must be positive");
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline std::string to_string(const mpz_class& x) { return x.get_str(); }

}  // namespace kgenus
