#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <infranil/errors.hpp>
#include <infranil/matrix.hpp>
#include <infranil/numtheory.hpp>
#include <infranil/rational.hpp>

namespace infranil {

/// Univariate polynomial, coefficients ascending by degree. The zero
/// polynomial is the empty coefficient list (degree -1).
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1);
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const T& leading() const { return coeffs_.back(); }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  bool operator==(const Polynomial& other) const = default;

  Polynomial operator+(const Polynomial& rhs) const {
    std::vector<T> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return Polynomial(std::move(c));
  }

  Polynomial operator-(const Polynomial& rhs) const {
    std::vector<T> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return Polynomial(std::move(c));
  }

  Polynomial operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<T> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(c));
  }

  template <class S>
  S evaluate(const S& x) const {
    S acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + S(coeffs_[i]);
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      T c = coeffs_[i];
      if (c == 0) continue;
      const bool negative = c < 0;
      if (first) {
        if (negative) os << "-";
        first = false;
      } else {
        os << (negative ? " - " : " + ");
      }
      T a = negative ? T(-c) : c;
      if (i == 0) {
        os << a;
      } else {
        if (a != 1) os << a;
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Quotient and remainder by a monic divisor; exact over any commutative ring.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod_monic(const Polynomial<T>& dividend,
                                                     const Polynomial<T>& divisor) {
  if (divisor.is_zero() || !divisor.is_monic())
    throw std::domain_error("divmod_monic needs a monic divisor");
  std::vector<T> rem(dividend.coeffs());
  const long dd = divisor.degree();
  if (dividend.degree() < dd) return {Polynomial<T>(), dividend};
  std::vector<T> quot(dividend.degree() - dd + 1);
  for (long i = dividend.degree(); i >= dd; --i) {
    T factor = rem[i];
    if (factor == 0) continue;
    quot[i - dd] = factor;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= factor * divisor.coeff(j);
  }
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

template <class T>
bool divides_monic(const Polynomial<T>& divisor, const Polynomial<T>& dividend) {
  return divmod_monic(dividend, divisor).second.is_zero();
}

namespace detail {

inline Integer exact_quotient(const Integer& a, unsigned long k) {
  if (!mpz_divisible_ui_p(a.get_mpz_t(), k))
    throw StructureError("characteristic polynomial recursion lost integrality");
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), a.get_mpz_t(), k);
  return q;
}

inline Rational exact_quotient(const Rational& a, unsigned long k) { return a / Rational(k); }

template <class T>
Polynomial<T> charpoly_impl(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<T> c(n + 1);
  c[n] = 1;
  Matrix<T> acc = Matrix<T>::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += acc(i, i);
    c[n - k] = -exact_quotient(tr, static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k];
  }
  return Polynomial<T>(std::move(c));
}

}  // namespace detail

/// Monic characteristic polynomial det(xI - m), Faddeev-LeVerrier recursion.
inline IntPolynomial charpoly(const IntMatrix& m) { return detail::charpoly_impl(m); }

/// Integer-entry fast path required by the public contract.
inline IntPolynomial charpoly(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("characteristic polynomial needs a square matrix");
  if (!is_integral(m)) throw std::domain_error("charpoly needs integer entries");
  return detail::charpoly_impl(to_integer(m));
}

/// Rational fallback for linear parts that stay non-integral after the
/// lattice change of basis.
inline RatPolynomial charpoly_rational(const RatMatrix& m) { return detail::charpoly_impl(m); }

/// The m-th cyclotomic polynomial, by exact division of x^m - 1 by all
/// lower-order factors.
inline IntPolynomial cyclotomic(unsigned long m) {
  if (m == 0) throw std::domain_error("cyclotomic index must be positive");
  const std::vector<unsigned long> divs = divisors(m);
  std::vector<IntPolynomial> memo(divs.size());
  for (std::size_t di = 0; di < divs.size(); ++di) {
    const unsigned long d = divs[di];
    std::vector<Integer> xd1(d + 1);
    xd1[0] = -1;
    xd1[d] = 1;
    IntPolynomial value(std::move(xd1));
    for (std::size_t ei = 0; ei < di; ++ei) {
      if (d % divs[ei] != 0) continue;
      auto [q, r] = divmod_monic(value, memo[ei]);
      if (!r.is_zero()) throw StructureError("cyclotomic division was not exact");
      value = std::move(q);
    }
    memo[di] = std::move(value);
  }
  return memo.back();
}

}  // namespace infranil
