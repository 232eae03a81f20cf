#pragma once

// Genus points of HP-infinity (Rector invariants) and the K-theory shadow of a
// map CP-infinity -> X of a given degree.

#include <kgenus/series.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kgenus {

enum class Sign : int { plus = 1, minus = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

/// "+1" or "-1".
std::string to_string(Sign s);

/// Accepts "+1", "1", "+", "-1", "-". Throws std::invalid_argument otherwise.
Sign parse_sign(std::string_view text);

/// A point of the genus: one sign per prime, stored as a default plus the
/// finitely many primes that differ from it.
class RectorInvariant {
 public:
  /// Throws if any key is not prime. Entries equal to the default are dropped.
  explicit RectorInvariant(Sign default_sign = Sign::plus, std::map<std::uint64_t, Sign> exceptions = {});

  /// HP-infinity itself: +1 at every prime.
  static RectorInvariant hp_infinity() { return RectorInvariant(); }

  Sign default_sign() const noexcept { return default_; }
  const std::map<std::uint64_t, Sign>& exceptions() const noexcept { return exceptions_; }

  /// (X/p). Throws if p is not prime.
  Sign lookup(std::uint64_t p) const;

  friend bool operator==(const RectorInvariant&, const RectorInvariant&) = default;

 private:
  Sign default_;
  std::map<std::uint64_t, Sign> exceptions_;
};

RectorInvariant make_genus(Sign default_sign, std::map<std::uint64_t, Sign> exceptions);

/// f^*(b^2 u_X) = k t^2 + c_3 t^3 + ... + c_M t^M for a map f of degree k.
class DegreeMapModel {
 public:
  /// `higher` holds c_3, c_4, ... in order. Degree 0 is rejected.
  explicit DegreeMapModel(std::int64_t degree, std::vector<Coefficient> higher = {});

  std::int64_t degree() const noexcept { return degree_; }
  const std::vector<Coefficient>& higher() const noexcept { return higher_; }

  /// The image truncated to `order`; higher terms past t^(order-1) drop out.
  Series as_series(std::size_t order) const;

 private:
  std::int64_t degree_;
  std::vector<Coefficient> higher_;
};

/// psi^p on K(X) at an odd prime p, in the form
///   psi^p(x) = x^p + 2 eps p x^((p+1)/2) + p w + p^2 z,   x = b^2 u_X,
/// with the unknown w, z carried as their images under f^*. An absent image is
/// zero.
class GenusPsiModel {
 public:
  /// Throws unless p is an odd prime, w_image vanishes through t^(p+1) and
  /// z_image vanishes at t^0 and t^1.
  GenusPsiModel(std::uint64_t p, Sign epsilon, std::optional<Series> w_image = std::nullopt,
                std::optional<Series> z_image = std::nullopt);

  std::uint64_t prime() const noexcept { return p_; }
  Sign epsilon() const noexcept { return epsilon_; }
  const std::optional<Series>& w_image() const noexcept { return w_; }
  const std::optional<Series>& z_image() const noexcept { return z_; }

 private:
  std::uint64_t p_;
  Sign epsilon_;
  std::optional<Series> w_;
  std::optional<Series> z_;
};

/// Smallest order that still holds t^(p+1).
constexpr std::size_t working_order(std::uint64_t p) { return static_cast<std::size_t>(p) + 2; }

/// f^* psi^p (b^2 u_X), exact and unreduced. Requires order >= p + 2 and
/// gcd(k, p) = 1; w/z images, when present, must have the same order.
Series lhs_series(const GenusPsiModel& model, const DegreeMapModel& f, std::size_t order);

/// psi^p f^* (b^2 u_X), exact and unreduced. Requires p odd prime and
/// order >= p + 2.
Series rhs_series(std::uint64_t p, const DegreeMapModel& f, std::size_t order);

}  // namespace kgenus
