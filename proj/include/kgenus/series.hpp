#pragma once

// Dense truncated power series Z[[t]]/(t^N) and the filtration ideals of the
// CP-infinity model, where t stands for the normalized generator b*lambda and
// t^n sits in skeletal filtration 2n.

#include <kgenus/coefficient.hpp>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace kgenus {

struct OrderMismatch : std::invalid_argument {
  OrderMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("truncation order mismatch: " + std::to_string(a) + " vs " +
                              std::to_string(b)) {}
};

/// Filtration ideal K_s pulled back to the CP-infinity model: t^n lies in it
/// exactly when 2n >= s.
struct FiltrationIdeal {
  std::size_t s = 0;

  /// The zero ideal (no monomial is ever inside it).
  static constexpr FiltrationIdeal none() {
    return FiltrationIdeal{std::numeric_limits<std::size_t>::max()};
  }

  /// Smallest exponent n with 2n >= s.
  constexpr std::size_t first_power() const { return s / 2 + s % 2; }

  constexpr bool contains_power(std::size_t n) const { return n >= first_power(); }

  friend constexpr bool operator==(FiltrationIdeal, FiltrationIdeal) = default;
};

template <RingScalar T>
class TruncatedSeries {
 public:
  using scalar_type = T;

  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : TruncatedSeries(order, std::vector<T>{}) {}

  /// Pads `coeffs` with zeros up to `order`. A list longer than `order` is
  /// rejected rather than truncated.
  TruncatedSeries(std::size_t order, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (order == 0) throw std::invalid_argument("series order must be at least 1");
    if (coeffs_.size() > order)
      throw std::invalid_argument("coefficient list of length " + std::to_string(coeffs_.size()) +
                                  " exceeds order " + std::to_string(order));
    coeffs_.resize(order, T{0});
  }

  static TruncatedSeries one(std::size_t order) { return constant(order, T{1}); }

  static TruncatedSeries constant(std::size_t order, T c) {
    return TruncatedSeries(order, std::vector<T>{std::move(c)});
  }

  /// c * t^n, or zero when n >= order.
  static TruncatedSeries monomial(std::size_t order, std::size_t n, T c = T{1}) {
    TruncatedSeries r(order);
    if (n < order) r.coeffs_[n] = std::move(c);
    return r;
  }

  std::size_t order() const noexcept { return coeffs_.size(); }

  /// Unchecked access.
  const T& operator[](std::size_t n) const noexcept { return coeffs_[n]; }

  /// Coefficient of t^n; throws std::out_of_range when n >= order.
  const T& coefficient(std::size_t n) const {
    if (n >= order())
      throw std::out_of_range("coefficient index " + std::to_string(n) + " outside order " +
                              std::to_string(order()));
    return coeffs_[n];
  }

  std::span<const T> coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or order() for the zero series.
  std::size_t valuation() const {
    std::size_t n = 0;
    while (n < order() && is_zero(coeffs_[n])) ++n;
    return n;
  }

  bool is_zero_series() const { return valuation() == order(); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<T> coeffs_;
};

using Series = TruncatedSeries<Coefficient>;

namespace detail {

template <typename T>
void require_same_order(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

template <typename T>
std::vector<T> to_vector(const TruncatedSeries<T>& f) {
  return {f.coeffs().begin(), f.coeffs().end()};
}

}  // namespace detail

template <RingScalar T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  auto r = detail::to_vector(a);
  for (std::size_t n = 0; n < r.size(); ++n) r[n] += b[n];
  return {a.order(), std::move(r)};
}

template <RingScalar T>
TruncatedSeries<T> sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  auto r = detail::to_vector(a);
  for (std::size_t n = 0; n < r.size(); ++n) r[n] -= b[n];
  return {a.order(), std::move(r)};
}

template <RingScalar T>
TruncatedSeries<T> scale(const T& c, const TruncatedSeries<T>& f) {
  std::vector<T> r(f.order(), T{0});
  if (!is_zero(c))
    for (std::size_t n = 0; n < r.size(); ++n) r[n] = c * f[n];
  return {f.order(), std::move(r)};
}

template <RingScalar T>
TruncatedSeries<T> negate(const TruncatedSeries<T>& f) {
  return scale(T{-1}, f);
}

/// Cauchy product truncated to the common order.
template <RingScalar T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  const std::size_t N = a.order();
  const std::size_t vb = b.valuation();
  std::vector<T> r(N, T{0});
  for (std::size_t i = a.valuation(); i + vb < N; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = vb; i + j < N; ++j) {
      if (is_zero(b[j])) continue;
      add_product(r[i + j], a[i], b[j]);
    }
  }
  return {N, std::move(r)};
}

/// f^e by repeated squaring; f^0 is the unit.
template <RingScalar T>
TruncatedSeries<T> pow(TruncatedSeries<T> base, unsigned long long e) {
  const std::size_t N = base.order();
  auto result = TruncatedSeries<T>::one(N);
  // valuation(f^e) = e * valuation(f); past the order the power vanishes.
  const std::size_t v = base.valuation();
  if (e != 0 && v != 0 && e >= (N + v - 1) / v) return TruncatedSeries<T>(N);
  while (e != 0) {
    if (e & 1ULL) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

/// f(g(t)) in the truncated ring. `g` must have zero constant term.
///
/// Horner evaluation h_n = f_n + g * h_{n+1}. Because h_n is later multiplied
/// by g^n, which has valuation >= n, it is only ever needed modulo t^(N-n), so
/// each step works at the smallest precision that still determines the result.
template <RingScalar T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g) {
  detail::require_same_order(f, g);
  if (!is_zero(g[0]))
    throw std::invalid_argument("inner series of a composition must have zero constant term");
  const std::size_t N = f.order();

  std::size_t top = N;
  while (top > 0 && is_zero(f[top - 1])) --top;
  if (top == 0) return TruncatedSeries<T>(N);
  --top;

  // Both buffers keep their scalars alive across steps; entries are reset by
  // assignment so big-integer limbs are reused.
  std::vector<T> h(N, T{0}), next(N, T{0});
  h[0] = f[top];
  std::size_t h_size = 1;
  for (std::size_t n = top; n-- > 0;) {
    const std::size_t precision = N - n;
    next[0] = f[n];
    for (std::size_t m = 1; m < precision; ++m) next[m] = T{0};
    for (std::size_t j = 1; j < precision; ++j) {
      if (is_zero(g[j])) continue;
      for (std::size_t m = j; m < precision && m - j < h_size; ++m)
        add_product(next[m], g[j], h[m - j]);
    }
    h.swap(next);
    h_size = precision;
  }
  for (std::size_t m = h_size; m < N; ++m) h[m] = T{0};
  return {N, std::move(h)};
}

/// Kills every monomial inside `ideal`, then (optionally) maps each surviving
/// coefficient to its canonical residue in [0, modulus).
template <RingScalar T>
TruncatedSeries<T> reduce(const TruncatedSeries<T>& f, FiltrationIdeal ideal,
                          const std::optional<std::type_identity_t<T>>& modulus = std::nullopt) {
  if (modulus && !(T{0} < *modulus)) throw std::invalid_argument("modulus must be positive");
  auto r = detail::to_vector(f);
  for (std::size_t n = 0; n < r.size(); ++n) {
    if (ideal.contains_power(n))
      r[n] = T{0};
    else if (modulus)
      r[n] = floor_mod(r[n], *modulus);
  }
  return {f.order(), std::move(r)};
}

template <RingScalar T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return add(a, b);
}

template <RingScalar T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return sub(a, b);
}

template <RingScalar T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& f) {
  return negate(f);
}

template <RingScalar T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return mul(a, b);
}

template <RingScalar T>
TruncatedSeries<T> operator*(const T& c, const TruncatedSeries<T>& f) {
  return scale(c, f);
}

/// Prints e.g. "9t^2 + 18t^3 - t^6 (mod t^7)".
template <RingScalar T>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<T>& f) {
  bool first = true;
  for (std::size_t n = 0; n < f.order(); ++n) {
    if (is_zero(f[n])) continue;
    T c = f[n];
    const bool negative = c < T{0};
    if (negative) c = T{0} - c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (n == 0 || !(c == T{1})) os << c;
    if (n >= 1) os << 't';
    if (n >= 2) os << '^' << n;
  }
  if (first) os << '0';
  return os << " (mod t^" << f.order() << ')';
}

}  // namespace kgenus
