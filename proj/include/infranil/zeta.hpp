#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <infranil/crystal.hpp>
#include <infranil/matrix.hpp>
#include <infranil/nielsen.hpp>
#include <infranil/periodic.hpp>
#include <infranil/polynomial.hpp>
#include <infranil/series.hpp>

namespace infranil {

/// exp(sum N(f^k) z^k / k), truncated.
inline RatSeries nielsen_zeta(const CrystalGroup& g, const SelfMapData& f, std::size_t order) {
  if (order == 0) throw std::domain_error("series order must be positive");
  std::vector<Rational> weights(order);
  for (std::size_t k = 1; k <= order; ++k) weights[k - 1] = Rational(nielsen_number(g, f, k));
  return series_exp_weighted(weights, order);
}

/// exp(sum NF_k(f) z^k / k), truncated.
inline RatSeries minimal_zeta(const CrystalGroup& g, const SelfMapData& f, std::size_t order) {
  if (order == 0) throw std::domain_error("series order must be positive");
  std::vector<Rational> weights(order);
  for (std::size_t k = 1; k <= order; ++k) weights[k - 1] = Rational(nf(g, f, k));
  return series_exp_weighted(weights, order);
}

struct RationalFit {
  RatPolynomial numerator;
  RatPolynomial denominator;  // constant term 1
};

namespace detail {

inline std::optional<RationalFit> try_pade(const RatSeries& s, std::size_t dp, std::size_t dq) {
  const std::vector<Rational>& c = s.coeffs;
  auto coeff = [&](long i) { return i >= 0 ? c[static_cast<std::size_t>(i)] : Rational(0); };

  std::vector<Rational> q{Rational(1)};
  if (dq > 0) {
    RatMatrix a(dq, dq);
    std::vector<Rational> b(dq);
    for (std::size_t r = 0; r < dq; ++r) {
      const long i = static_cast<long>(dp + 1 + r);
      for (std::size_t j = 0; j < dq; ++j) a(r, j) = coeff(i - static_cast<long>(j) - 1);
      b[r] = -coeff(i);
    }
    const LinearSolution sol = solve_linear(a, b);
    if (sol.kind == SolveKind::inconsistent) return std::nullopt;
    q.insert(q.end(), sol.x.begin(), sol.x.end());
  }
  std::vector<Rational> p(dp + 1);
  for (std::size_t i = 0; i <= dp; ++i)
    for (std::size_t j = 0; j <= std::min(i, dq); ++j) p[i] += q[j] * coeff(static_cast<long>(i - j));

  // Re-expand p/q and require agreement with every known coefficient.
  std::vector<Rational> expansion(c.size());
  for (std::size_t i = 0; i < expansion.size(); ++i) {
    Rational acc = i <= dp ? p[i] : Rational(0);
    for (std::size_t j = 1; j <= std::min(i, dq); ++j) acc -= q[j] * expansion[i - j];
    expansion[i] = acc;
    if (expansion[i] != c[i]) return std::nullopt;
  }
  return RationalFit{RatPolynomial(std::move(p)), RatPolynomial(std::move(q))};
}

}  // namespace detail

/// Searches for polynomials p, q with deg <= max_degree, q(0) = 1, whose
/// quotient reproduces every coefficient of the series; smallest degrees win.
/// A hit is only "consistent to the truncation order", never a proof.
inline std::optional<RationalFit> probe_rationality(const RatSeries& s, std::size_t max_degree) {
  if (s.order() < 2 * max_degree + 1)
    throw std::domain_error("probe_rationality: series order must be at least 2*max_degree + 1");
  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t dp = 0; dp <= max_degree; ++dp)
    for (std::size_t dq = 0; dq <= max_degree; ++dq) candidates.emplace_back(dp, dq);
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    const std::size_t ma = std::max(a.first, a.second), mb = std::max(b.first, b.second);
    if (ma != mb) return ma < mb;
    if (a.first + a.second != b.first + b.second) return a.first + a.second < b.first + b.second;
    return a < b;
  });
  for (const auto& [dp, dq] : candidates)
    if (auto fit = detail::try_pade(s, dp, dq)) return fit;
  return std::nullopt;
}

}  // namespace infranil
