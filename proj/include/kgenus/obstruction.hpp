#pragma once

// The degree obstruction: a map CP-infinity -> X of degree k, with k prime to
// an odd prime p, forces (X/p) = (k/p). This header holds the Legendre symbol,
// the closed-form test, the same test executed by series expansion, and the
// reports built on top of them.

#include <kgenus/genus.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace kgenus {

inline constexpr std::uint64_t kDefaultSeed = 0;
inline constexpr std::size_t kDefaultTrials = 200;

/// Random coefficients of the unknown series lie in [-kRandomCoefficientBound, kRandomCoefficientBound].
inline constexpr std::int64_t kRandomCoefficientBound = 1000;

/// Extra orders beyond t^(p+1) used by the expansion so that the w image and
/// the higher terms of f^* reach monomials the ideal has to kill.
inline constexpr std::size_t kExpansionHeadroom = 2;

/// Legendre symbol (k/p) by Euler's criterion k^((p-1)/2) mod p. Throws if p
/// is not an odd prime or p divides k.
Sign legendre(std::int64_t k, std::uint64_t p);

/// eps * k^((p-1)/2) == 1 (mod p).
bool lemma_check(std::uint64_t p, Sign epsilon, std::int64_t k);

struct ExpansionReport {
  /// t^(p+1) coefficients of the reduced sides in the first trial, in [0, p^2).
  Coefficient lhs_coefficient;
  Coefficient rhs_coefficient;
  /// The coefficients agreed in every trial.
  bool holds = false;
  /// Neither reduced side changed across trials.
  bool stable = false;
  std::size_t trials = 0;
};

/// Compares f^* psi^p (b^2 u_X) with psi^p f^* (b^2 u_X) modulo K_{2p+3} and
/// p^2 over `trials` seeded random choices of the higher terms of f^* and of
/// the w, z images.
ExpansionReport expand_congruence(std::uint64_t p, Sign epsilon, std::int64_t k, std::size_t trials,
                                  std::uint64_t seed = kDefaultSeed);

/// expand_congruence(...).holds. Agrees with lemma_check on every input.
bool lemma_check_bruteforce(std::uint64_t p, Sign epsilon, std::int64_t k, std::size_t trials,
                            std::uint64_t seed = kDefaultSeed);

enum class Outcome { admissible, obstructed };

struct Obstruction {
  std::uint64_t prime;
  Sign required;  // (k/p)
  Sign actual;    // (X/p)
  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// Result of testing a genus point against a degree at finitely many primes.
/// `admissible` only means no obstruction was found; it never asserts that a
/// map exists.
struct Verdict {
  std::int64_t degree = 0;
  Outcome outcome = Outcome::admissible;
  std::optional<Obstruction> obstruction;  // smallest violating prime
  std::vector<std::uint64_t> tested;
  std::vector<std::uint64_t> skipped;  // primes dividing the degree
};

/// Throws on k = 0 or on a set containing 2 or a non-prime.
Verdict admissible(const RectorInvariant& genus, std::int64_t k, std::span<const std::uint64_t> primes);

struct ForcedGenusReport {
  std::int64_t degree = 0;
  std::uint64_t bound = 0;
  std::map<std::uint64_t, Sign> forced;
  std::vector<std::uint64_t> free;
  /// 1 + number of distinct odd prime factors of the degree.
  std::size_t free_count_total = 0;

  /// 2^free_count_total: at most this many genus points survive the obstruction.
  std::uint64_t max_surviving() const { return std::uint64_t{1} << free_count_total; }
};

/// Throws on k = 0 or bound < 2.
ForcedGenusReport forced_genus(std::int64_t k, std::uint64_t bound);

struct XpExample {
  std::uint64_t prime;
  RectorInvariant genus;  // +1 everywhere except -1 at `prime`
  std::int64_t witness;   // smallest quadratic non-residue in (1, p)
};

/// Throws unless p is an odd prime.
XpExample example_xp(std::uint64_t p);

}  // namespace kgenus
