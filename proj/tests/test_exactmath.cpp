#include <random>

#include <catch2/catch_amalgamated.hpp>

#include <infranil/matrix.hpp>
#include <infranil/numtheory.hpp>
#include <infranil/polynomial.hpp>
#include <infranil/rational.hpp>
#include <infranil/series.hpp>
#include <infranil/smith.hpp>

using namespace infranil;

namespace {

RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

RatMatrix random_rational_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("0").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("a"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/"), ValidationError);
}

TEST_CASE("determinant on pinned examples") {
  CHECK(det(rat_matrix({{-2, 0}, {0, 2}})) == -4);
  CHECK(det(RatMatrix::identity(3)) == 1);
  CHECK(det(rat_matrix({{-2, 0}, {0, 0}})) == 0);
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const RatMatrix a = random_rational_matrix(rng, n);
    const RatMatrix b = random_rational_matrix(rng, n);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("determinant needs pivoting") {
  CHECK(det(rat_matrix({{0, 1}, {1, 0}})) == -1);
  CHECK(det(rat_matrix({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
}

TEST_CASE("charpoly on pinned examples") {
  CHECK(charpoly(int_matrix({{0, 1}, {-1, 1}})) == IntPolynomial({Integer(1), Integer(-1), Integer(1)}));
  CHECK(charpoly(int_matrix({{2}})) == IntPolynomial({Integer(-2), Integer(1)}));
  CHECK(charpoly(int_matrix({{0, 0}, {0, 0}})) == IntPolynomial({Integer(0), Integer(0), Integer(1)}));
  CHECK_THROWS_AS(charpoly(IntMatrix(2, 3)), DimensionError);
  RatMatrix half(1, 1);
  half(0, 0) = Rational(1, 2);
  CHECK_THROWS_AS(charpoly(half), std::domain_error);
}

TEST_CASE("charpoly evaluation matches the determinant route") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 4;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    const IntPolynomial p = charpoly(m);
    const Rational probe = make_rational(17, 5);  // no eigenvalue has denominator 5
    RatMatrix shifted(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        shifted(i, j) = -Rational(m(i, j));
        if (i == j) shifted(i, j) += probe;
      }
    CHECK(p.evaluate(probe) == det(shifted));
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPolynomial({Integer(-1), Integer(1)}));
  CHECK(cyclotomic(4) == IntPolynomial({Integer(1), Integer(0), Integer(1)}));
  CHECK(cyclotomic(6) == IntPolynomial({Integer(1), Integer(-1), Integer(1)}));
  CHECK_THROWS_AS(cyclotomic(0), std::domain_error);

  for (unsigned long m = 1; m <= 24; ++m) {
    IntPolynomial product({Integer(1)});
    for (unsigned long d : divisors(m)) product = product * cyclotomic(d);
    std::vector<Integer> expected(m + 1);
    expected[0] = -1;
    expected[m] = 1;
    CHECK(product == IntPolynomial(std::move(expected)));
  }
}

TEST_CASE("cyclotomic degrees are euler phi") {
  for (unsigned long m = 1; m <= 30; ++m)
    CHECK(cyclotomic(m).degree() == static_cast<long>(euler_phi(m)));
}

TEST_CASE("smith normal form on pinned examples") {
  const SmithResult diag23 = smith_normal_form(int_matrix({{2, 0}, {0, 3}}));
  CHECK(diag23.s(0, 0) == 1);
  CHECK(diag23.s(1, 1) == 6);

  const SmithResult ident = smith_normal_form(IntMatrix::identity(3));
  CHECK(ident.s == IntMatrix::identity(3));

  const SmithResult zero = smith_normal_form(int_matrix({{0}}));
  CHECK(zero.s == int_matrix({{0}}));
}

TEST_CASE("smith normal form invariants on random matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    const SmithResult res = smith_normal_form(m);
    CHECK(res.u * m * res.v == res.s);
    CHECK(abs(det(res.u)) == 1);
    CHECK(abs(det(res.v)) == 1);
    for (std::size_t i = 0; i < std::min(r, c); ++i) {
      CHECK(res.s(i, i) >= 0);
      if (i + 1 < std::min(r, c) && res.s(i, i) != 0)
        CHECK(res.s(i + 1, i + 1) % res.s(i, i) == 0);
      if (res.s(i, i) == 0 && i + 1 < std::min(r, c)) CHECK(res.s(i + 1, i + 1) == 0);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(res.s(i, j) == 0);
  }
}

TEST_CASE("divisors and moebius") {
  CHECK(divisors(6) == std::vector<unsigned long>{1, 2, 3, 6});
  CHECK(divisors(1) == std::vector<unsigned long>{1});
  CHECK(moebius(1) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(divisors(0), std::domain_error);
  CHECK_THROWS_AS(moebius(0), std::domain_error);

  for (unsigned long n = 2; n <= 60; ++n) {
    int sum = 0;
    for (unsigned long d : divisors(n)) sum += moebius(d);
    CHECK(sum == 0);
  }
}

TEST_CASE("series exponential with weighted recurrence") {
  const RatSeries geometric = series_exp_weighted({Rational(1), Rational(1), Rational(1)}, 3);
  CHECK(geometric.coeffs == std::vector<Rational>{1, 1, 1, 1});

  const RatSeries constant = series_exp_weighted({Rational(0), Rational(0)}, 2);
  CHECK(constant.coeffs == std::vector<Rational>{1, 0, 0});

  const RatSeries doubling = series_exp_weighted({Rational(1), Rational(3)}, 2);
  CHECK(doubling.coeffs == std::vector<Rational>{1, 1, 2});

  CHECK_THROWS_AS(series_exp_weighted({Rational(1)}, 2), std::domain_error);
}

TEST_CASE("series log inverts series exp") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> weights(8);
    for (Rational& w : weights) w = make_rational(num(rng), den(rng));
    const RatSeries s = series_exp_weighted(weights, 8);
    CHECK(series_log_weighted(s) == weights);
  }
}
