#include <kgenus/adams.hpp>
#include <kgenus/number_theory.hpp>

#include <stdexcept>
#include <string>

namespace kgenus {

AdamsIndex::AdamsIndex(std::uint64_t r) : r_(r) {
  if (r == 0) throw std::invalid_argument("Adams operation index must be at least 1");
}

Series psi_generator(AdamsIndex r, std::size_t order) {
  const auto one = Series::one(order);
  return pow(one + Series::monomial(order, 1), r.value()) - one;
}

Series psi_apply(AdamsIndex r, const Series& f) {
  if (!is_zero(f[0]))
    throw std::invalid_argument("psi_apply: series must have zero constant term");
  return compose(f, psi_generator(r, f.order()));
}

bool check_composition(AdamsIndex a, AdamsIndex b, std::size_t order) {
  return psi_apply(a, psi_generator(b, order)) == psi_generator(AdamsIndex(a.value() * b.value()), order);
}

bool check_frobenius(std::uint64_t p, const Series& f) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto difference = psi_apply(AdamsIndex(p), f) - pow(f, p);
  return reduce(difference, FiltrationIdeal::none(), Coefficient(static_cast<unsigned long>(p)))
      .is_zero_series();
}

}  // namespace kgenus
