#include <catch2/catch_amalgamated.hpp>

#include <infranil/classify.hpp>
#include <infranil/zeta.hpp>

#include "fixtures.hpp"

using namespace infranil;
using fixtures::mat;

TEST_CASE("nielsen zeta series") {
  const CrystalGroup torus = fixtures::torus_group(1);
  const SelfMapData doubling = fixtures::torus_map(torus, mat({{2}}));
  CHECK(nielsen_zeta(torus, doubling, 3).coeffs == std::vector<Rational>{1, 1, 2, 4});

  const SelfMapData ident = fixtures::torus_map(torus, RatMatrix::identity(1));
  CHECK(nielsen_zeta(torus, ident, 4).coeffs == std::vector<Rational>{1, 0, 0, 0, 0});

  const CrystalGroup klein = fixtures::klein_group();
  const SelfMapData klein3 = fixtures::klein_map(klein, 3);
  CHECK(nielsen_zeta(klein, klein3, 2).coeffs == std::vector<Rational>{1, 2, 6});
}

TEST_CASE("minimal zeta series") {
  const CrystalGroup klein = fixtures::klein_group();
  const SelfMapData klein3 = fixtures::klein_map(klein, 3);
  CHECK(minimal_zeta(klein, klein3, 2).coeffs == std::vector<Rational>{1, 2, 7});

  const CrystalGroup torus = fixtures::torus_group(1);
  const SelfMapData ident = fixtures::torus_map(torus, RatMatrix::identity(1));
  CHECK(minimal_zeta(torus, ident, 3).coeffs == std::vector<Rational>{1, 0, 0, 0});
}

TEST_CASE("semi-hyperbolic maps have equal zeta series") {
  const CrystalGroup torus2 = fixtures::torus_group(2);
  const SelfMapData cat = fixtures::torus_map(torus2, mat({{2, 1}, {1, 1}}));
  REQUIRE(is_semi_hyperbolic(torus2, cat).semi_hyperbolic);
  CHECK(nielsen_zeta(torus2, cat, 12) == minimal_zeta(torus2, cat, 12));

  const CrystalGroup torus = fixtures::torus_group(1);
  const SelfMapData doubling = fixtures::torus_map(torus, mat({{2}}));
  CHECK(nielsen_zeta(torus, doubling, 12) == minimal_zeta(torus, doubling, 12));
}

TEST_CASE("rationality probe reconstructs the circle doubling zeta") {
  const CrystalGroup torus = fixtures::torus_group(1);
  const SelfMapData doubling = fixtures::torus_map(torus, mat({{2}}));
  const RatSeries series = nielsen_zeta(torus, doubling, 5);
  const auto fit = probe_rationality(series, 2);
  REQUIRE(fit.has_value());
  CHECK(fit->numerator == RatPolynomial({Rational(1), Rational(-1)}));    // 1 - z
  CHECK(fit->denominator == RatPolynomial({Rational(1), Rational(-2)}));  // 1 - 2z
}

TEST_CASE("rationality probe on the constant series") {
  RatSeries constant(std::vector<Rational>(6, Rational(0)));
  constant.coeffs[0] = 1;
  const auto fit = probe_rationality(constant, 2);
  REQUIRE(fit.has_value());
  CHECK(fit->numerator == RatPolynomial({Rational(1)}));
  CHECK(fit->denominator == RatPolynomial({Rational(1)}));
}

TEST_CASE("rationality probe verifies by re-expansion") {
  const CrystalGroup klein = fixtures::klein_group();
  const SelfMapData klein3 = fixtures::klein_map(klein, 3);
  const RatSeries series = nielsen_zeta(klein, klein3, 9);
  const auto fit = probe_rationality(series, 4);
  REQUIRE(fit.has_value());
  // Re-expand the returned quotient independently and compare every term.
  std::vector<Rational> expansion(series.coeffs.size());
  for (std::size_t i = 0; i < expansion.size(); ++i) {
    Rational acc = fit->numerator.coeff(i);
    for (std::size_t j = 1; j <= std::min<std::size_t>(i, fit->denominator.degree()); ++j)
      acc -= fit->denominator.coeff(j) * expansion[i - j];
    expansion[i] = acc;
  }
  CHECK(expansion == series.coeffs);
}

TEST_CASE("rationality probe gives up when no fit exists") {
  // exp(z) truncated: coefficients 1/n! do not satisfy a degree-1 recurrence.
  std::vector<Rational> weights{Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)};
  const RatSeries log1p = series_exp_weighted(weights, 5);  // 1 + z
  CHECK(probe_rationality(log1p, 2).has_value());

  RatSeries factorials(std::vector<Rational>(7, Rational(1)));
  Rational fact(1);
  for (std::size_t i = 1; i < factorials.coeffs.size(); ++i) {
    fact /= Rational(static_cast<unsigned long>(i));
    factorials.coeffs[i] = fact;
  }
  CHECK_FALSE(probe_rationality(factorials, 2).has_value());
}

TEST_CASE("probe preconditions") {
  RatSeries tiny(std::vector<Rational>{1, 1, 1});
  CHECK_THROWS_AS(probe_rationality(tiny, 2), std::domain_error);
}

TEST_CASE("zeta coefficients of the examples are integral") {
  const CrystalGroup groups[] = {fixtures::klein_group(), fixtures::z3_group(), fixtures::z6_group()};
  const SelfMapData maps[] = {fixtures::klein_map(groups[0], 3), fixtures::z3_map(groups[1]),
                              fixtures::z6_map(groups[2])};
  for (int ex = 0; ex < 3; ++ex) {
    for (const Rational& c : nielsen_zeta(groups[ex], maps[ex], 10).coeffs) CHECK(is_integer(c));
    for (const Rational& c : minimal_zeta(groups[ex], maps[ex], 10).coeffs) CHECK(is_integer(c));
  }
}

TEST_CASE("minimal zeta of affine semi-hyperbolic torus maps counts fixed points") {
  const CrystalGroup torus = fixtures::torus_group(1);
  const SelfMapData doubling = fixtures::torus_map(torus, mat({{2}}));
  // Wecken at every level: the fixed point counts are the Nielsen numbers,
  // so the fixed-point zeta equals the minimal zeta coefficientwise.
  std::vector<Rational> counts(12);
  for (std::size_t k = 1; k <= 12; ++k)
    counts[k - 1] = Rational(Integer((1UL << k) - 1));  // |det(2^k - 1)| points
  CHECK(series_exp_weighted(counts, 12) == minimal_zeta(torus, doubling, 12));
}
