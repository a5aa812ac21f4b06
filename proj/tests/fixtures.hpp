#pragma once

#include <infranil/affine.hpp>
#include <infranil/crystal.hpp>
#include <infranil/matrix.hpp>
#include <infranil/rational.hpp>

namespace fixtures {

using namespace infranil;

inline RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline std::vector<Rational> vec(std::initializer_list<Rational> entries) { return entries; }

// Klein bottle group: alpha = ((1/2,1/2), diag(1,-1)), lattice Z^2.
inline CrystalGroup klein_group() {
  const AffineElement alpha({make_rational(1, 2), make_rational(1, 2)}, mat({{1, 0}, {0, -1}}));
  return make_crystal_group(2, {}, {alpha});
}

// The family (d,D) = ((p,1/2), diag(k,-1)); induces a self-map for odd k.
inline SelfMapData klein_map(const CrystalGroup& g, long k, const Rational& p = Rational(0)) {
  RatMatrix d(2, 2);
  d(0, 0) = k;
  d(1, 1) = -1;
  return make_self_map(g, AffineElement({p, make_rational(1, 2)}, d));
}

// Holonomy Z3 acting on R^3: alpha = ((0,0,1/3), block rotation + 1).
inline CrystalGroup z3_group() {
  const AffineElement alpha({Rational(0), Rational(0), make_rational(1, 3)},
                            mat({{-1, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
  return make_crystal_group(3, {}, {alpha});
}

inline SelfMapData z3_map(const CrystalGroup& g) {
  return make_self_map(g, AffineElement({Rational(0), Rational(0), Rational(0)},
                                        mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 2}})));
}

// Holonomy Z6 acting on R^3: alpha = ((0,0,1/6), order-6 block + 1).
inline CrystalGroup z6_group() {
  const AffineElement alpha({Rational(0), Rational(0), make_rational(1, 6)},
                            mat({{1, -1, 0}, {1, 0, 0}, {0, 0, 1}}));
  return make_crystal_group(3, {}, {alpha});
}

inline SelfMapData z6_map(const CrystalGroup& g) {
  return make_self_map(g, AffineElement({Rational(0), Rational(0), Rational(0)},
                                        mat({{0, 1, 0}, {-1, 1, 0}, {0, 0, 7}})));
}

inline CrystalGroup torus_group(std::size_t dim) { return make_crystal_group(dim, {}, {}); }

inline SelfMapData torus_map(const CrystalGroup& g, const RatMatrix& linear,
                             std::vector<Rational> translation = {}) {
  if (translation.empty()) translation.assign(g.dimension, Rational(0));
  return make_self_map(g, AffineElement(std::move(translation), linear));
}

}  // namespace fixtures
