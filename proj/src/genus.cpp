#include <kgenus/adams.hpp>
#include <kgenus/genus.hpp>
#include <kgenus/number_theory.hpp>

#include <stdexcept>

namespace kgenus {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (!is_odd_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

void require_order(std::uint64_t p, std::size_t order) {
  if (order < working_order(p))
    throw std::invalid_argument("order " + std::to_string(order) + " cannot hold t^" +
                                std::to_string(p + 1));
}

Coefficient to_coefficient(std::uint64_t v) { return Coefficient(static_cast<unsigned long>(v)); }

Coefficient to_coefficient(std::int64_t v) { return Coefficient(static_cast<long>(v)); }

}  // namespace

std::string to_string(Sign s) { return s == Sign::plus ? "+1" : "-1"; }

Sign parse_sign(std::string_view text) {
  if (text == "+1" || text == "1" || text == "+") return Sign::plus;
  if (text == "-1" || text == "-") return Sign::minus;
  throw std::invalid_argument("invalid sign '" + std::string(text) + "' (expected +1 or -1)");
}

RectorInvariant::RectorInvariant(Sign default_sign, std::map<std::uint64_t, Sign> exceptions)
    : default_(default_sign) {
  for (const auto& [p, s] : exceptions) {
    if (!is_prime(p)) throw std::invalid_argument("genus key " + std::to_string(p) + " is not prime");
    if (s != default_) exceptions_.emplace(p, s);
  }
}

Sign RectorInvariant::lookup(std::uint64_t p) const {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const auto it = exceptions_.find(p);
  return it == exceptions_.end() ? default_ : it->second;
}

RectorInvariant make_genus(Sign default_sign, std::map<std::uint64_t, Sign> exceptions) {
  return RectorInvariant(default_sign, std::move(exceptions));
}

DegreeMapModel::DegreeMapModel(std::int64_t degree, std::vector<Coefficient> higher)
    : degree_(degree), higher_(std::move(higher)) {
  if (degree_ == 0) throw std::invalid_argument("degree must be nonzero");
}

Series DegreeMapModel::as_series(std::size_t order) const {
  std::vector<Coefficient> c(order, 0);
  if (order > 2) c[2] = to_coefficient(degree_);
  for (std::size_t i = 0; i < higher_.size() && i + 3 < order; ++i) c[i + 3] = higher_[i];
  return Series(order, std::move(c));
}

GenusPsiModel::GenusPsiModel(std::uint64_t p, Sign epsilon, std::optional<Series> w_image,
                             std::optional<Series> z_image)
    : p_(p), epsilon_(epsilon), w_(std::move(w_image)), z_(std::move(z_image)) {
  require_odd_prime(p);
  // w lies in K_{2p+3}: no monomials t^n with 2n < 2p + 3.
  if (w_ && w_->valuation() < p + 2)
    throw std::invalid_argument("w image must vanish through t^" + std::to_string(p + 1));
  // z lies in K_4.
  if (z_ && z_->valuation() < 2)
    throw std::invalid_argument("z image must vanish at t^0 and t^1");
}

Series lhs_series(const GenusPsiModel& model, const DegreeMapModel& f, std::size_t order) {
  const std::uint64_t p = model.prime();
  require_order(p, order);
  if (residue(f.degree(), p) == 0)
    throw std::invalid_argument("degree " + std::to_string(f.degree()) + " is divisible by " +
                                std::to_string(p));

  const auto x = f.as_series(order);
  const Coefficient pc = to_coefficient(p);
  const Coefficient middle = 2 * to_int(model.epsilon()) * pc;
  auto result = pow(x, p) + middle * pow(x, (p + 1) / 2);
  if (model.w_image()) result = result + pc * *model.w_image();
  if (model.z_image()) result = result + Coefficient(pc * pc) * *model.z_image();
  return result;
}

Series rhs_series(std::uint64_t p, const DegreeMapModel& f, std::size_t order) {
  require_odd_prime(p);
  require_order(p, order);
  return psi_apply(AdamsIndex(p), f.as_series(order));
}

}  // namespace kgenus
