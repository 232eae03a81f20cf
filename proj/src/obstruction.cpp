#include <kgenus/number_theory.hpp>
#include <kgenus/obstruction.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace kgenus {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

void require_coprime(std::int64_t k, std::uint64_t p) {
  if (residue(k, p) == 0)
    throw std::invalid_argument(std::to_string(p) + " divides the degree " + std::to_string(k));
}

void require_nonzero(std::int64_t k) {
  if (k == 0) throw std::invalid_argument("degree must be nonzero");
}

Series random_series(std::size_t order, std::size_t from, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-kRandomCoefficientBound, kRandomCoefficientBound);
  std::vector<Coefficient> c(order, 0);
  for (std::size_t n = from; n < order; ++n) c[n] = coeff(rng);
  return Series(order, std::move(c));
}

}  // namespace

Sign legendre(std::int64_t k, std::uint64_t p) {
  require_odd_prime(p);
  require_coprime(k, p);
  return pow_mod(residue(k, p), (p - 1) / 2, p) == 1 ? Sign::plus : Sign::minus;
}

bool lemma_check(std::uint64_t p, Sign epsilon, std::int64_t k) {
  require_odd_prime(p);
  require_coprime(k, p);
  const std::uint64_t power = pow_mod(residue(k, p), (p - 1) / 2, p);
  const std::uint64_t product = epsilon == Sign::plus ? power : (p - power) % p;
  return product == 1;
}

ExpansionReport expand_congruence(std::uint64_t p, Sign epsilon, std::int64_t k, std::size_t trials,
                                  std::uint64_t seed) {
  require_odd_prime(p);
  require_nonzero(k);
  require_coprime(k, p);
  if (trials == 0) throw std::invalid_argument("at least one trial is required");

  const std::size_t order = working_order(p) + kExpansionHeadroom;
  const FiltrationIdeal ideal{2 * static_cast<std::size_t>(p) + 3};
  const Coefficient modulus = Coefficient(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
  const std::size_t top = static_cast<std::size_t>(p) + 1;

  std::mt19937_64 rng(seed);
  ExpansionReport report;
  report.holds = true;
  report.stable = true;
  report.trials = trials;
  std::optional<Series> first_lhs, first_rhs;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto higher = random_series(order, 3, rng);
    const DegreeMapModel f(k, {higher.coeffs().begin() + 3, higher.coeffs().end()});
    const GenusPsiModel model(p, epsilon, random_series(order, ideal.first_power(), rng),
                              random_series(order, 2, rng));

    const auto lhs = reduce(lhs_series(model, f, order), ideal, std::optional{modulus});
    const auto rhs = reduce(rhs_series(p, f, order), ideal, std::optional{modulus});
    if (lhs[top] != rhs[top]) report.holds = false;

    if (!first_lhs) {
      report.lhs_coefficient = lhs[top];
      report.rhs_coefficient = rhs[top];
      first_lhs = lhs;
      first_rhs = rhs;
    } else if (lhs != *first_lhs || rhs != *first_rhs) {
      report.stable = false;
    }
  }
  return report;
}

bool lemma_check_bruteforce(std::uint64_t p, Sign epsilon, std::int64_t k, std::size_t trials,
                            std::uint64_t seed) {
  return expand_congruence(p, epsilon, k, trials, seed).holds;
}

Verdict admissible(const RectorInvariant& genus, std::int64_t k, std::span<const std::uint64_t> primes) {
  require_nonzero(k);
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto p : sorted) require_odd_prime(p);

  Verdict v;
  v.degree = k;
  for (const auto p : sorted) {
    if (residue(k, p) == 0) {
      v.skipped.push_back(p);
      continue;
    }
    v.tested.push_back(p);
    const Sign actual = genus.lookup(p);
    if (!v.obstruction && !lemma_check(p, actual, k)) {
      v.outcome = Outcome::obstructed;
      v.obstruction = Obstruction{p, legendre(k, p), actual};
    }
  }
  return v;
}

ForcedGenusReport forced_genus(std::int64_t k, std::uint64_t bound) {
  require_nonzero(k);
  if (bound < 2) throw std::invalid_argument("bound must be at least 2");

  ForcedGenusReport r;
  r.degree = k;
  r.bound = bound;
  r.free.push_back(2);
  for (const auto p : odd_primes_up_to(bound)) {
    if (residue(k, p) == 0)
      r.free.push_back(p);
    else
      r.forced.emplace(p, legendre(k, p));
  }
  const auto factors = distinct_prime_factors(k);
  r.free_count_total = 1 + static_cast<std::size_t>(std::count_if(
                               factors.begin(), factors.end(), [](std::uint64_t q) { return q != 2; }));
  return r;
}

XpExample example_xp(std::uint64_t p) {
  require_odd_prime(p);
  for (std::uint64_t k = 2; k < p; ++k) {
    const auto candidate = static_cast<std::int64_t>(k);
    if (legendre(candidate, p) == Sign::minus)
      return {p, RectorInvariant(Sign::plus, {{p, Sign::minus}}), candidate};
  }
  // Half of the units mod an odd prime are non-residues, and 1 is a residue.
  throw std::logic_error("no quadratic non-residue below " + std::to_string(p));
}

}  // namespace kgenus
