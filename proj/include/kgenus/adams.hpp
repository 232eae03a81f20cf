#pragma once

// Adams operations on K(CP-infinity) = Z[[t]], t = b*lambda. Each psi^r is the
// ring endomorphism fixing Z that sends t to (1 + t)^r - 1; it is always
// evaluated by substituting that image for t.

#include <kgenus/series.hpp>

#include <cstdint>

namespace kgenus {

/// Index r >= 1 of an Adams operation psi^r.
class AdamsIndex {
 public:
  explicit AdamsIndex(std::uint64_t r);
  std::uint64_t value() const noexcept { return r_; }

 private:
  std::uint64_t r_;
};

/// psi^r(t) = (1 + t)^r - 1 truncated to `order`.
Series psi_generator(AdamsIndex r, std::size_t order);

/// psi^r(f) = f(psi^r(t)). `f` must have zero constant term.
Series psi_apply(AdamsIndex r, const Series& f);

/// Whether psi^a(psi^b(t)) == psi^{ab}(t) at the given order. Always true;
/// exposed so the law can be checked rather than assumed.
bool check_composition(AdamsIndex a, AdamsIndex b, std::size_t order);

/// Whether psi^p(f) == f^p (mod p) coefficient-wise. Throws unless p is prime
/// and f has zero constant term.
bool check_frobenius(std::uint64_t p, const Series& f);

}  // namespace kgenus
