#pragma once

#include <infranil/crystal.hpp>
#include <infranil/errors.hpp>
#include <infranil/matrix.hpp>
#include <infranil/rational.hpp>

namespace infranil {

/// det(I - A * D^n) for the holonomy element with the given index.
inline Rational iterate_det(const CrystalGroup& g, const SelfMapData& f, int a_index,
                            unsigned long n) {
  const RatMatrix& dn = f.linear_power(n);
  return det(RatMatrix::identity(g.dimension) - g.holonomy[a_index] * dn);
}

/// Averaged determinant sum; must come out integral on valid input.
inline Integer lefschetz(const CrystalGroup& g, const SelfMapData& f, unsigned long n) {
  Rational acc(0);
  for (std::size_t i = 0; i < g.order(); ++i) acc += iterate_det(g, f, static_cast<int>(i), n);
  acc /= Rational(static_cast<unsigned long>(g.order()));
  if (!is_integer(acc))
    throw StructureError("Lefschetz number is not an integer: input data is inconsistent");
  return acc.get_num();
}

/// Averaged absolute determinant sum; integral and nonnegative on valid input.
inline Integer nielsen_number(const CrystalGroup& g, const SelfMapData& f, unsigned long n) {
  Rational acc(0);
  for (std::size_t i = 0; i < g.order(); ++i)
    acc += abs(iterate_det(g, f, static_cast<int>(i), n));
  acc /= Rational(static_cast<unsigned long>(g.order()));
  if (!is_integer(acc))
    throw StructureError("Nielsen number is not an integer: input data is inconsistent");
  return acc.get_num();
}

/// The Reidemeister number of the n-th iterate is finite iff no averaged
/// determinant term vanishes; when finite it equals the Nielsen number.
inline bool reidemeister_finite(const CrystalGroup& g, const SelfMapData& f, unsigned long n) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (iterate_det(g, f, static_cast<int>(i), n) == 0) return false;
  return true;
}

/// Fixed point classes above a holonomy element are essential iff the
/// determinant term does not vanish.
inline bool class_essential(const CrystalGroup& g, const SelfMapData& f, unsigned long n,
                            int a_index) {
  return iterate_det(g, f, a_index, n) != 0;
}

}  // namespace infranil
