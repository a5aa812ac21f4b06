#pragma once

#include <stdexcept>
#include <vector>

#include <infranil/rational.hpp>

namespace infranil {

/// Truncated formal power series; coeffs[k] is the z^k coefficient.
struct RatSeries {
  std::vector<Rational> coeffs;

  RatSeries() = default;
  explicit RatSeries(std::vector<Rational> c) : coeffs(std::move(c)) {}

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const RatSeries& other) const = default;
};

/// Coefficients of exp(sum_{k>=1} a_k z^k / k) up to z^order, where
/// weights[k-1] = a_k. Uses n*c_n = sum_{k=1}^{n} a_k c_{n-k}.
inline RatSeries series_exp_weighted(const std::vector<Rational>& weights, std::size_t order) {
  if (weights.size() < order)
    throw std::domain_error("series_exp_weighted: need at least `order` weights");
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += weights[k - 1] * c[n - k];
    c[n] = acc / Rational(static_cast<unsigned long>(n));
  }
  return RatSeries(std::move(c));
}

/// Inverse of series_exp_weighted: recovers a_1..a_order from a series with
/// constant term 1.
inline std::vector<Rational> series_log_weighted(const RatSeries& s) {
  if (s.coeffs.empty() || s.coeffs[0] != 1)
    throw std::domain_error("series_log_weighted: constant term must be 1");
  const std::size_t order = s.order();
  std::vector<Rational> a(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = Rational(static_cast<unsigned long>(n)) * s.coeffs[n];
    for (std::size_t k = 1; k < n; ++k) acc -= a[k - 1] * s.coeffs[n - k];
    a[n - 1] = acc;
  }
  return a;
}

}  // namespace infranil
