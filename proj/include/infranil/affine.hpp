#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <infranil/errors.hpp>
#include <infranil/matrix.hpp>
#include <infranil/rational.hpp>

namespace infranil {

/// Affine transformation x -> translation + linear * x. Composition follows
/// (a,A)(b,B) = (a + A b, A B).
struct AffineElement {
  std::vector<Rational> translation;
  RatMatrix linear;

  AffineElement() = default;
  AffineElement(std::vector<Rational> t, RatMatrix m) : translation(std::move(t)), linear(std::move(m)) {
    if (linear.rows() != translation.size() || !linear.square())
      throw DimensionError("affine element shape mismatch");
  }

  static AffineElement identity(std::size_t dim) {
    return AffineElement(std::vector<Rational>(dim), RatMatrix::identity(dim));
  }

  std::size_t dim() const { return translation.size(); }
  bool is_identity() const {
    if (linear != RatMatrix::identity(dim())) return false;
    for (const Rational& t : translation)
      if (t != 0) return false;
    return true;
  }

  bool operator==(const AffineElement& other) const = default;

  std::string str() const {
    std::ostringstream os;
    os << "((";
    for (std::size_t i = 0; i < translation.size(); ++i) os << (i ? "," : "") << translation[i];
    os << ")," << linear.str() << ")";
    return os.str();
  }
};

inline AffineElement compose(const AffineElement& a, const AffineElement& b) {
  if (a.dim() != b.dim()) throw DimensionError("affine composition dimension mismatch");
  std::vector<Rational> t = a.linear * b.translation;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += a.translation[i];
  return AffineElement(std::move(t), a.linear * b.linear);
}

inline AffineElement inverse(const AffineElement& a) {
  RatMatrix inv = inverse(a.linear);
  std::vector<Rational> t = inv * a.translation;
  for (Rational& x : t) x = -x;
  return AffineElement(std::move(t), std::move(inv));
}

/// k-fold composition, k >= 0.
inline AffineElement iterate(const AffineElement& a, unsigned long k) {
  AffineElement acc = AffineElement::identity(a.dim());
  for (unsigned long i = 0; i < k; ++i) acc = compose(acc, a);
  return acc;
}

inline std::vector<Rational> apply(const AffineElement& a, const std::vector<Rational>& x) {
  std::vector<Rational> y = a.linear * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a.translation[i];
  return y;
}

}  // namespace infranil
