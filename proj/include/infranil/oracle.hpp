#pragma once

#include <vector>

#include <infranil/affine.hpp>
#include <infranil/crystal.hpp>
#include <infranil/errors.hpp>
#include <infranil/matrix.hpp>
#include <infranil/smith.hpp>

namespace infranil {

struct TorusFixCount {
  bool finite = true;
  Integer count;  // meaningful when finite
};

/// Exact number of solutions of (D^k - I) x = -d_k over the torus, counted
/// through the Smith normal form of the homogeneous part. Reports "infinite"
/// for consistent underdetermined systems.
inline TorusFixCount torus_fix_count(const IntMatrix& linear, const std::vector<Rational>& translation,
                                     unsigned long k) {
  if (!linear.square() || linear.rows() != translation.size())
    throw DimensionError("torus map shape mismatch");
  if (k == 0) throw std::domain_error("iterate must be positive");
  const std::size_t m = linear.rows();

  const IntMatrix system = linear.pow(k) - IntMatrix::identity(m);
  // Translation of the k-th iterate: sum_{i<k} D^i d.
  std::vector<Rational> iterate_translation(m);
  IntMatrix power = IntMatrix::identity(m);
  for (unsigned long i = 0; i < k; ++i) {
    const std::vector<Rational> term = to_rational(power) * translation;
    for (std::size_t c = 0; c < m; ++c) iterate_translation[c] += term[c];
    power = power * linear;
  }

  const SmithResult snf = smith_normal_form(system);
  std::vector<Rational> rhs(m);
  for (std::size_t i = 0; i < m; ++i) rhs[i] = -iterate_translation[i];
  const std::vector<Rational> c = to_rational(snf.u) * rhs;

  Integer count = 1;
  bool infinite = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (snf.s(i, i) == 0) {
      if (!is_integer(c[i])) return {true, Integer(0)};  // inconsistent congruence
      infinite = true;
    } else {
      count *= snf.s(i, i);
    }
  }
  if (infinite) return {false, Integer(0)};
  if (count != abs(det(system)))
    throw StructureError("lattice-point count disagrees with the determinant");
  return {true, count};
}

struct FixedPointRecord {
  std::vector<Rational> point;
  int holonomy = 0;                  // index into the group's holonomy list
  std::vector<long> lattice_offset;  // coset coordinates of the solving lift
};

struct InfiniteCosetRecord {
  int holonomy = 0;
  std::vector<long> lattice_offset;
};

struct FlatEnumeration {
  std::vector<FixedPointRecord> points;          // one per fixed point class found
  std::vector<InfiniteCosetRecord> infinite_cosets;
};

/// Solves gamma (d,D)^k x = x for every group element gamma with lattice
/// coordinates in [-window, window]^m, deduplicating solutions under the
/// group action. Isolated solutions are exactly the essential fixed point
/// classes; consistent singular systems are reported, not enumerated.
inline FlatEnumeration flat_fix_enumerate(const CrystalGroup& g, const SelfMapData& f,
                                          unsigned long k, long window = 3) {
  if (k == 0) throw std::domain_error("iterate must be positive");
  if (window < 0) throw std::domain_error("window must be nonnegative");
  const std::size_t m = g.dimension;
  const AffineElement iterate_lift = iterate(f.lift, k);
  FlatEnumeration out;

  auto equivalent = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    // y = (t_j + F_j L mu, F_j) x for some j and integral mu?
    for (std::size_t j = 0; j < g.order(); ++j) {
      std::vector<Rational> diff = y;
      const std::vector<Rational> fx = g.holonomy[j] * x;
      for (std::size_t i = 0; i < m; ++i) diff[i] -= g.lifts[j].translation[i] + fx[i];
      const std::vector<Rational> mu = g.lattice_basis_inv * (g.holonomy[g.inv[j]] * diff);
      bool integral = true;
      for (const Rational& c : mu) integral = integral && is_integer(c);
      if (integral) return true;
    }
    return false;
  };

  std::vector<long> offset(m, -window);
  for (;;) {
    for (std::size_t hol = 0; hol < g.order(); ++hol) {
      std::vector<Rational> lattice_part(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) lattice_part[i] += g.lattice_basis(i, j) * Rational(offset[j]);
      const AffineElement gamma =
          compose(g.lifts[hol], AffineElement(lattice_part, RatMatrix::identity(m)));
      const AffineElement total = compose(gamma, iterate_lift);
      // (I - M) x = v
      const RatMatrix lhs = RatMatrix::identity(m) - total.linear;
      const LinearSolution sol = solve_linear(lhs, total.translation);
      if (sol.kind == SolveKind::inconsistent) continue;
      if (sol.kind == SolveKind::underdetermined) {
        out.infinite_cosets.push_back({static_cast<int>(hol), offset});
        continue;
      }
      if (apply(total, sol.x) != sol.x)
        throw StructureError("enumerated fixed point fails its defining equation");
      bool duplicate = false;
      for (const FixedPointRecord& seen : out.points)
        if (equivalent(seen.point, sol.x)) {
          duplicate = true;
          break;
        }
      if (!duplicate) out.points.push_back({sol.x, static_cast<int>(hol), offset});
    }
    std::size_t pos = 0;
    while (pos < m && offset[pos] == window) offset[pos++] = -window;
    if (pos == m) break;
    ++offset[pos];
  }
  return out;
}

}  // namespace infranil
