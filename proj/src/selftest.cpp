#include <kgenus/adams.hpp>
#include <kgenus/number_theory.hpp>
#include <kgenus/selftest.hpp>

#include <random>
#include <set>
#include <sstream>

namespace kgenus {

namespace {

class Suite {
 public:
  Suite(std::string name, const SelftestOptions& options) : options_(options) {
    result_.name = std::move(name);
    fault_ = options.inject_fault == result_.name;
  }

  /// Records one check; `describe` is only evaluated on failure.
  template <typename Describe>
  bool check(bool ok, Describe&& describe) {
    ++result_.checks;
    if (fault_) {
      ok = !ok;
      fault_ = false;
    }
    if (!ok && !result_.counterexample) result_.counterexample = describe();
    return ok;
  }

  bool failed() const { return result_.counterexample.has_value(); }
  SuiteResult take() { return std::move(result_); }
  const SelftestOptions& options() const { return options_; }

 private:
  const SelftestOptions& options_;
  SuiteResult result_;
  bool fault_ = false;
};

Series random_series(std::mt19937_64& rng, std::size_t order, std::size_t from = 0, long bound = 50) {
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<Coefficient> c(order, 0);
  for (std::size_t n = from; n < order; ++n) c[n] = coeff(rng);
  return Series(order, std::move(c));
}

// Full product followed by truncation; shares no code with mul().
Series schoolbook_product(const Series& a, const Series& b) {
  const std::size_t N = a.order();
  std::vector<Coefficient> full(2 * N - 1, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) full[i + j] += a[i] * b[j];
  full.resize(N);
  return Series(N, std::move(full));
}

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

void ring_axioms(Suite& s) {
  std::mt19937_64 rng(s.options().seed);
  std::uniform_int_distribution<std::size_t> pick_order(1, 16);
  for (int trial = 0; trial < 1000 && !s.failed(); ++trial) {
    const std::size_t N = pick_order(rng);
    const auto a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
    const auto zero = Series(N), one = Series::one(N);
    auto where = [&] { return "a = " + show(a) + ", b = " + show(b) + ", c = " + show(c); };
    s.check((a + b) + c == a + (b + c), [&] { return "additive associativity: " + where(); });
    s.check(a + b == b + a, [&] { return "additive commutativity: " + where(); });
    s.check((a * b) * c == a * (b * c), [&] { return "multiplicative associativity: " + where(); });
    s.check(a * b == b * a, [&] { return "multiplicative commutativity: " + where(); });
    s.check(a * (b + c) == a * b + a * c, [&] { return "distributivity: " + where(); });
    s.check(a + zero == a && a * one == a && a - a == zero, [&] { return "identities: " + where(); });
    s.check(a * b == schoolbook_product(a, b), [&] { return "schoolbook product: " + where(); });
  }
}

void adams_laws(Suite& s) {
  constexpr std::size_t order = 32;
  for (std::uint64_t a = 1; a <= 12 && !s.failed(); ++a)
    for (std::uint64_t b = 1; b <= 12; ++b)
      s.check(check_composition(AdamsIndex(a), AdamsIndex(b), order), [&] {
        return "psi^" + std::to_string(a) + " psi^" + std::to_string(b) + " != psi^" + std::to_string(a * b);
      });

  std::mt19937_64 rng(s.options().seed + 1);
  std::uniform_int_distribution<std::size_t> pick_order(2, 16);
  std::uniform_int_distribution<std::uint64_t> pick_r(1, 12);
  for (int trial = 0; trial < 200 && !s.failed(); ++trial) {
    const std::size_t N = pick_order(rng);
    const AdamsIndex r(pick_r(rng));
    const auto f = random_series(rng, N, 1), g = random_series(rng, N, 1);
    auto where = [&] { return "r = " + std::to_string(r.value()) + ", F = " + show(f) + ", G = " + show(g); };
    s.check(psi_apply(r, f + g) == psi_apply(r, f) + psi_apply(r, g), [&] { return "additivity: " + where(); });
    s.check(psi_apply(r, f * g) == psi_apply(r, f) * psi_apply(r, g), [&] { return "multiplicativity: " + where(); });
    s.check(psi_apply(AdamsIndex(1), f) == f, [&] { return "psi^1 != id: " + where(); });
  }
}

void frobenius(Suite& s) {
  const auto primes = primes_up_to(s.options().max_prime);
  if (primes.empty()) return;
  std::mt19937_64 rng(s.options().seed + 2);
  std::uniform_int_distribution<std::size_t> pick_order(2, 24);
  for (std::size_t trial = 0; trial < 500 && !s.failed(); ++trial) {
    const auto p = primes[trial % primes.size()];
    const auto f = random_series(rng, pick_order(rng), 1);
    s.check(check_frobenius(p, f), [&] { return "psi^" + std::to_string(p) + "(F) != F^p mod p for F = " + show(f); });
  }
}

void legendre_oracle(Suite& s) {
  const auto bound = std::max<std::uint64_t>(199, s.options().max_prime);
  for (const auto p : odd_primes_up_to(bound)) {
    std::set<std::uint64_t> squares;
    for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::uint64_t k = 1; k < p && !s.failed(); ++k) {
      const auto expected = squares.contains(k) ? Sign::plus : Sign::minus;
      const auto got = legendre(static_cast<std::int64_t>(k), p);
      s.check(got == expected, [&] {
        return "(" + std::to_string(k) + "/" + std::to_string(p) + ") = " + to_string(got) + ", enumeration gives " +
               to_string(expected);
      });
    }
    for (std::uint64_t a = 1; a < p && !s.failed(); a += 7)
      for (std::uint64_t b = 1; b < p; b += 5) {
        const auto ab = static_cast<std::int64_t>(a * b);
        s.check(legendre(ab, p) == legendre(static_cast<std::int64_t>(a), p) * legendre(static_cast<std::int64_t>(b), p),
                [&] { return "multiplicativity fails at p = " + std::to_string(p) + ", a = " + std::to_string(a) +
                             ", b = " + std::to_string(b); });
      }
    if (s.failed()) return;
  }
}

void lemma_equivalence(Suite& s) {
  const auto& o = s.options();
  for (const auto p : odd_primes_up_to(o.max_prime)) {
    const Coefficient modulus = Coefficient(static_cast<unsigned long>(p * p));
    for (std::int64_t k = -o.max_degree; k <= o.max_degree && !s.failed(); ++k) {
      if (k == 0 || residue(k, p) == 0) continue;
      for (const Sign eps : {Sign::plus, Sign::minus}) {
        const auto closed = lemma_check(p, eps, k);
        const auto expanded = expand_congruence(p, eps, k, o.trials, o.seed);
        auto where = [&] {
          return "p = " + std::to_string(p) + ", k = " + std::to_string(k) + ", eps = " + to_string(eps);
        };
        const Coefficient kc(static_cast<long>(k));
        Coefficient k_power;
        mpz_pow_ui(k_power.get_mpz_t(), kc.get_mpz_t(), (p + 1) / 2);
        s.check(expanded.rhs_coefficient == floor_mod(Coefficient(2 * kc * static_cast<unsigned long>(p)), modulus),
                [&] { return "RHS coefficient != 2pk mod p^2: " + where(); });
        s.check(expanded.lhs_coefficient == floor_mod(Coefficient(2 * to_int(eps) * k_power * static_cast<unsigned long>(p)), modulus),
                [&] { return "LHS coefficient != 2 eps p k^((p+1)/2) mod p^2: " + where(); });
        s.check(expanded.stable, [&] { return "reduced sides depend on the unknown terms: " + where(); });
        s.check(closed == expanded.holds, [&] {
          return "closed form says " + std::string(closed ? "holds" : "fails") + ", expansion says " +
                 (expanded.holds ? "holds" : "fails") + ": " + where();
        });
      }
    }
    if (s.failed()) return;
  }
}

struct NamedSuite {
  const char* name;
  void (*run)(Suite&);
};

constexpr NamedSuite kSuites[] = {
    {"ring-axioms", ring_axioms},
    {"adams-laws", adams_laws},
    {"frobenius", frobenius},
    {"legendre-oracle", legendre_oracle},
    {"lemma-equivalence", lemma_equivalence},
};

}  // namespace

std::vector<std::string> selftest_suite_names() {
  std::vector<std::string> names;
  for (const auto& s : kSuites) names.emplace_back(s.name);
  return names;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& options,
                                      const std::function<void(const SuiteResult&)>& progress) {
  std::vector<SuiteResult> results;
  for (const auto& named : kSuites) {
    Suite suite(named.name, options);
    named.run(suite);
    results.push_back(suite.take());
    if (progress) progress(results.back());
    if (results.back().counterexample) break;
  }
  return results;
}

}  // namespace kgenus
