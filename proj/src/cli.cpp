#include <kgenus/cli.hpp>
#include <kgenus/number_theory.hpp>
#include <kgenus/selftest.hpp>
#include <kgenus/serialize.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace kgenus {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::uint64_t>& v) {
  if (v.empty()) return "(none)";
  std::string s;
  for (const auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s;
}

class Table {
 public:
  explicit Table(std::ostream& os, int width = 32) : os_(os), width_(width) {}
  template <typename T>
  Table& row(const std::string& key, const T& value) {
    os_ << std::left << std::setw(width_) << key << value << '\n';
    return *this;
  }

 private:
  std::ostream& os_;
  int width_;
};

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kSeedEnvVar) + " must be a non-negative integer, got '" + env + "'");
  }
}

const char* kNecessaryOnly =
    "Admissible means no obstruction at the tested primes; it does not assert that a map exists.";

struct VerifyArgs {
  std::uint64_t prime = 0;
  std::int64_t degree = 0;
  std::string epsilon;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_verify_lemma(const VerifyArgs& a, bool json, std::ostream& out) {
  if (!is_odd_prime(a.prime)) throw UsageError(std::to_string(a.prime) + " is not an odd prime");
  if (a.degree == 0) throw UsageError("degree must be nonzero");
  if (residue(a.degree, a.prime) == 0)
    throw UsageError(std::to_string(a.prime) + " divides the degree " + std::to_string(a.degree));
  if (a.trials == 0) throw UsageError("--trials must be positive");
  const Sign eps = parse_sign(a.epsilon);

  const bool closed = lemma_check(a.prime, eps, a.degree);
  const auto expansion = expand_congruence(a.prime, eps, a.degree, a.trials, a.seed);
  const int code = closed != expansion.holds ? kExitInconsistent : (closed ? kExitOk : kExitMathFailure);
  const char* result = code == kExitOk ? "pass" : (code == kExitMathFailure ? "fail" : "inconsistent");
  const Coefficient modulus = Coefficient(static_cast<unsigned long>(a.prime)) * static_cast<unsigned long>(a.prime);
  const auto power = a.prime + 1;

  if (json) {
    Json j;
    j["prime"] = a.prime;
    j["degree"] = a.degree;
    j["epsilon"] = to_string(eps);
    j["legendre"] = to_string(legendre(a.degree, a.prime));
    j["modulus"] = coefficient_json(modulus);
    j["coefficient_power"] = power;
    j["lhs_coefficient"] = coefficient_json(expansion.lhs_coefficient);
    j["rhs_coefficient"] = coefficient_json(expansion.rhs_coefficient);
    j["closed_form"] = closed;
    j["expansion"] = expansion.holds;
    j["expansion_stable"] = expansion.stable;
    j["trials"] = a.trials;
    j["seed"] = a.seed;
    j["result"] = result;
    out << j.dump(2) << '\n';
  } else {
    const auto t = "t^" + std::to_string(power);
    Table(out)
        .row("prime p", a.prime)
        .row("degree k", a.degree)
        .row("epsilon (X/p)", to_string(eps))
        .row("legendre (k/p)", to_string(legendre(a.degree, a.prime)))
        .row("modulus p^2", modulus)
        .row("LHS " + t + " coefficient", expansion.lhs_coefficient)
        .row("RHS " + t + " coefficient", expansion.rhs_coefficient)
        .row("closed form", closed ? "holds" : "fails")
        .row("series expansion", std::string(expansion.holds ? "holds" : "fails") + " (" +
                                     std::to_string(a.trials) + " trials, seed " + std::to_string(a.seed) + ")")
        .row("result", result);
  }
  return code;
}

struct AdmissibleArgs {
  std::int64_t degree = 0;
  std::string genus;
  std::string genus_file;
  std::vector<std::uint64_t> primes;
  std::uint64_t bound = 0;
};

RectorInvariant load_genus(const AdmissibleArgs& a) {
  if (!a.genus_file.empty()) {
    std::ifstream in(a.genus_file);
    if (!in) throw UsageError("cannot read genus file '" + a.genus_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      return genus_from_json(Json::parse(buffer.str()));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("malformed genus file: " + std::string(e.what()));
    }
  }
  return parse_genus_spec(a.genus);
}

int cmd_admissible(const AdmissibleArgs& a, bool use_bound, bool json, std::ostream& out) {
  const auto genus = load_genus(a);
  const auto primes = use_bound ? odd_primes_up_to(a.bound) : a.primes;
  const auto v = admissible(genus, a.degree, primes);
  if (json) {
    out << to_json(v).dump(2) << '\n';
  } else {
    Table t(out, 12);
    t.row("degree", v.degree).row("genus", format_genus_spec(genus)).row("tested", join(v.tested)).row(
        "skipped", join(v.skipped));
    if (v.obstruction) {
      const auto& o = *v.obstruction;
      t.row("verdict", "Obstructed at p = " + std::to_string(o.prime) + ": (k/p) = " + to_string(o.required) +
                           " but (X/p) = " + to_string(o.actual));
    } else {
      t.row("verdict", "Admissible");
      out << kNecessaryOnly << '\n';
    }
  }
  return v.outcome == Outcome::admissible ? kExitOk : kExitMathFailure;
}

int cmd_forced_genus(std::int64_t k, std::uint64_t bound, bool json, std::ostream& out) {
  if (k == 0) throw UsageError("degree must be nonzero");
  if (bound < 2) throw UsageError("bound must be at least 2");
  const auto r = forced_genus(k, bound);
  if (json) {
    out << to_json(r).dump(2) << '\n';
    return kExitOk;
  }
  out << "degree " << r.degree << ", primes up to " << r.bound << "\n\n";
  out << std::left << std::setw(10) << "prime" << "forced (X/p)\n";
  for (const auto& [p, s] : r.forced) out << std::left << std::setw(10) << p << to_string(s) << '\n';
  out << '\n';
  Table(out, 56)
      .row("free primes up to bound", join(r.free))
      .row("free primes overall", r.free_count_total)
      .row("max surviving genus points (necessary-condition bound)", r.max_surviving());
  return kExitOk;
}

int cmd_example_xp(std::uint64_t p, bool json, std::ostream& out) {
  if (!is_odd_prime(p)) throw UsageError(std::to_string(p) + " is not an odd prime");
  const auto e = example_xp(p);
  const std::uint64_t single[] = {p};
  const auto verdict = admissible(e.genus, e.witness, single);
  const bool closed = lemma_check(p, Sign::minus, e.witness);
  if (json) {
    auto j = to_json(e);
    j["legendre"] = to_string(legendre(e.witness, p));
    j["lemma_check"] = closed;
    j["verdict"] = to_json(verdict);
    out << j.dump(2) << '\n';
  } else {
    Table(out, 24)
        .row("prime p", p)
        .row("genus X(p)", format_genus_spec(e.genus))
        .row("witness degree k", e.witness)
        .row("legendre (k/p)", to_string(legendre(e.witness, p)))
        .row("lemma check at p", closed ? "holds" : "fails")
        .row("verdict at {p}", verdict.outcome == Outcome::admissible ? "Admissible" : "Obstructed");
  }
  return verdict.outcome == Outcome::admissible && closed ? kExitOk : kExitInconsistent;
}

int cmd_selftest(const SelftestOptions& options, std::ostream& out) {
  if (options.max_degree < 1) throw UsageError("--max-degree must be positive");
  if (options.trials == 0) throw UsageError("--trials must be positive");
  if (options.inject_fault) {
    const auto names = selftest_suite_names();
    if (std::find(names.begin(), names.end(), *options.inject_fault) == names.end())
      throw UsageError("unknown suite '" + *options.inject_fault + "'");
  }
  std::size_t total = 0;
  const auto results = run_selftest(options, [&](const SuiteResult& r) {
    total += r.checks;
    out << std::left << std::setw(20) << r.name << std::right << std::setw(10) << r.checks << " checks  "
        << (r.counterexample ? "FAIL" : "ok") << '\n';
    if (r.counterexample) out << "counterexample: " << *r.counterexample << '\n';
  });
  const bool ok = !results.back().counterexample;
  out << (ok ? "all suites passed" : "selftest failed") << " (" << total << " checks)\n";
  return ok ? kExitOk : kExitMathFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated K-theory computations for maps CP^inf -> X in the genus of HP^inf", "kgenus"};
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  };

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  VerifyArgs verify;
  verify.seed = seed;
  auto* verify_cmd = app.add_subcommand("verify-lemma", "Check the degree congruence at one prime, two ways");
  verify_cmd->add_option("--prime", verify.prime, "Odd prime p")->required();
  verify_cmd->add_option("--degree", verify.degree, "Degree k, prime to p")->required();
  verify_cmd->add_option("--epsilon", verify.epsilon, "Rector invariant (X/p): +1 or -1")->required();
  verify_cmd->add_option("--trials", verify.trials, "Random choices of the unknown terms")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  add_format(verify_cmd);

  AdmissibleArgs adm;
  auto* adm_cmd = app.add_subcommand("admissible", "Test a genus point against a degree at finitely many primes");
  adm_cmd->add_option("--degree", adm.degree, "Degree k")->required();
  auto* genus_opt = adm_cmd->add_option("--genus", adm.genus, "Genus point, e.g. \"3:-1,7:+1;default=+1\" or JSON");
  auto* genus_file_opt = adm_cmd->add_option("--genus-file", adm.genus_file, "JSON file holding the genus point");
  genus_opt->excludes(genus_file_opt);
  auto* primes_opt = adm_cmd->add_option("--primes", adm.primes, "Odd primes to test")->delimiter(',');
  auto* bound_opt = adm_cmd->add_option("--bound", adm.bound, "Test every odd prime up to this bound");
  primes_opt->excludes(bound_opt);
  add_format(adm_cmd);

  std::int64_t forced_degree = 0;
  std::uint64_t forced_bound = 0;
  auto* forced_cmd = app.add_subcommand("forced-genus", "List the invariants a degree forces");
  forced_cmd->add_option("--degree", forced_degree, "Degree k")->required();
  forced_cmd->add_option("--bound", forced_bound, "Largest prime to report")->required();
  add_format(forced_cmd);

  std::uint64_t xp_prime = 0;
  auto* xp_cmd = app.add_subcommand("example-xp", "Genus point X(p) and its non-residue witness degree");
  xp_cmd->add_option("--prime", xp_prime, "Odd prime p")->required();
  add_format(xp_cmd);

  SelftestOptions self;
  self.seed = seed;
  std::string fault;
  auto* self_cmd = app.add_subcommand("selftest", "Run the randomized property suites");
  self_cmd->add_option("--max-prime", self.max_prime, "Largest prime swept")->capture_default_str();
  self_cmd->add_option("--max-degree", self.max_degree, "Largest |k| swept")->capture_default_str();
  self_cmd->add_option("--trials", self.trials, "Random trials per expansion")->capture_default_str();
  self_cmd->add_option("--seed", self.seed, "Random seed")->capture_default_str();
  self_cmd->add_option("--inject-fault", fault, "Falsify the first check of a suite")->group("");

  std::vector<std::string> argv_storage{"kgenus"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (verify_cmd->parsed()) return cmd_verify_lemma(verify, json, out);
    if (adm_cmd->parsed()) {
      if (genus_opt->empty() && genus_file_opt->empty()) throw UsageError("one of --genus or --genus-file is required");
      if (primes_opt->empty() && bound_opt->empty()) throw UsageError("one of --primes or --bound is required");
      return cmd_admissible(adm, !bound_opt->empty(), json, out);
    }
    if (forced_cmd->parsed()) return cmd_forced_genus(forced_degree, forced_bound, json, out);
    if (xp_cmd->parsed()) return cmd_example_xp(xp_prime, json, out);
    if (self_cmd->parsed()) {
      if (!fault.empty()) self.inject_fault = fault;
      return cmd_selftest(self, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kgenus
