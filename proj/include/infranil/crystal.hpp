#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <infranil/affine.hpp>
#include <infranil/errors.hpp>
#include <infranil/matrix.hpp>
#include <infranil/rational.hpp>
#include <infranil/smith.hpp>

namespace infranil {

constexpr std::size_t kDefaultClosureBound = 10000;

/// A crystallographic group given by a lattice basis and one chosen affine
/// lift per holonomy element. holonomy[0] is always the identity and
/// lifts[0] the identity transformation; the member order is the closure
/// discovery order (generator powers come out consecutively).
class CrystalGroup {
 public:
  std::size_t dimension = 0;
  RatMatrix lattice_basis;      // columns generate the translation lattice
  RatMatrix lattice_basis_inv;
  std::vector<RatMatrix> holonomy;
  std::vector<AffineElement> lifts;
  std::vector<std::vector<int>> mult;  // mult[i][j] = index of holonomy[i]*holonomy[j]
  std::vector<int> inv;                // index of holonomy[i]^{-1}

  std::size_t order() const { return holonomy.size(); }

  int index_of(const RatMatrix& m) const {
    for (std::size_t i = 0; i < holonomy.size(); ++i)
      if (holonomy[i] == m) return static_cast<int>(i);
    return -1;
  }

  /// Order of holonomy[i] in the finite group.
  unsigned long element_order(int i) const {
    unsigned long r = 1;
    int acc = i;
    while (acc != 0) {
      acc = mult[acc][i];
      ++r;
    }
    return r;
  }

  bool lattice_contains(const std::vector<Rational>& v) const {
    const std::vector<Rational> coords = lattice_basis_inv * v;
    for (const Rational& c : coords)
      if (!is_integer(c)) return false;
    return true;
  }

  /// Membership via the coset decomposition: linear part must be in F and
  /// the translation must differ from the chosen lift's by a lattice vector.
  bool contains(const AffineElement& g) const {
    const int idx = index_of(g.linear);
    if (idx < 0) return false;
    std::vector<Rational> diff = g.translation;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= lifts[idx].translation[i];
    return lattice_contains(diff);
  }
};

namespace detail {

/// Reduces a set of rational generating vectors (columns) to a lattice
/// basis by integer column operations after clearing denominators.
inline RatMatrix lattice_basis_from_generators(std::size_t dim,
                                               const std::vector<AffineElement>& gens) {
  Integer denom = 1;
  for (const AffineElement& g : gens)
    for (const Rational& x : g.translation) denom = lcm(denom, x.get_den());
  IntMatrix cols(dim, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) {
      Rational scaled = gens[j].translation[i] * Rational(denom);
      cols(i, j) = scaled.get_num();
    }
  const SmithResult snf = smith_normal_form(cols);
  for (std::size_t i = 0; i < dim; ++i)
    if (i >= std::min(cols.rows(), cols.cols()) || snf.s(i, i) == 0)
      throw ValidationError("lattice generators do not span a rank-" + std::to_string(dim) +
                            " lattice");
  // Columns of U^{-1} * S form a basis of the column lattice of `cols`.
  const RatMatrix u_inv = inverse(to_rational(snf.u));
  RatMatrix basis(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) basis(i, j) = u_inv(i, j) * Rational(snf.s(j, j));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) basis(i, j) /= Rational(denom);
  return basis;
}

}  // namespace detail

/// Builds and validates the group: holonomy closure by saturation, lattice
/// stability, and an exact torsion test per holonomy element.
inline CrystalGroup make_crystal_group(std::size_t dim,
                                       std::vector<AffineElement> lattice_generators,
                                       const std::vector<AffineElement>& holonomy_lifts,
                                       std::size_t closure_bound = kDefaultClosureBound) {
  if (dim == 0) throw ValidationError("dimension must be positive");
  CrystalGroup g;
  g.dimension = dim;

  if (lattice_generators.empty())
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Rational> e(dim);
      e[i] = 1;
      lattice_generators.emplace_back(std::move(e), RatMatrix::identity(dim));
    }
  for (const AffineElement& lg : lattice_generators) {
    if (lg.dim() != dim) throw ValidationError("lattice generator dimension mismatch");
    if (lg.linear != RatMatrix::identity(dim))
      throw ValidationError("lattice generators must have identity linear part");
  }
  g.lattice_basis = detail::lattice_basis_from_generators(dim, lattice_generators);
  g.lattice_basis_inv = inverse(g.lattice_basis);

  // Saturate the holonomy under right multiplication by the generators.
  g.holonomy.push_back(RatMatrix::identity(dim));
  g.lifts.push_back(AffineElement::identity(dim));
  for (const AffineElement& h : holonomy_lifts)
    if (h.dim() != dim) throw ValidationError("holonomy lift dimension mismatch");
  for (std::size_t head = 0; head < g.holonomy.size(); ++head) {
    for (const AffineElement& gen : holonomy_lifts) {
      const AffineElement next = compose(g.lifts[head], gen);
      if (g.index_of(next.linear) >= 0) continue;
      if (g.holonomy.size() >= closure_bound)
        throw ValidationError("holonomy not finite within bound");
      g.holonomy.push_back(next.linear);
      g.lifts.push_back(next);
    }
  }

  const std::size_t n = g.order();
  g.mult.assign(n, std::vector<int>(n, -1));
  g.inv.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int k = g.index_of(g.holonomy[i] * g.holonomy[j]);
      if (k < 0) throw ValidationError("holonomy is not closed under products");
      g.mult[i][j] = k;
      if (k == 0) g.inv[i] = static_cast<int>(j);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (g.inv[i] < 0) throw ValidationError("holonomy element without inverse");

  // F must map the lattice onto itself.
  for (std::size_t i = 0; i < n; ++i) {
    const RatMatrix conj = g.lattice_basis_inv * g.holonomy[i] * g.lattice_basis;
    if (!is_integral(conj) || abs(det(conj)) != 1)
      throw ValidationError("holonomy does not preserve the lattice");
  }

  // Exact torsion test: (a + lambda, A)^r = id for some lattice lambda iff
  // sum_j A^j a is in (sum_j A^j) * L.
  for (std::size_t i = 1; i < n; ++i) {
    const unsigned long r = g.element_order(static_cast<int>(i));
    RatMatrix power_sum(dim, dim);
    std::vector<Rational> orbit_sum(dim);
    RatMatrix power = RatMatrix::identity(dim);
    for (unsigned long j = 0; j < r; ++j) {
      power_sum = power_sum + power;
      const std::vector<Rational> term = power * g.lifts[i].translation;
      for (std::size_t c = 0; c < dim; ++c) orbit_sum[c] += term[c];
      power = power * g.holonomy[i];
    }
    // Solve power_sum * (L x) = -orbit_sum for integer x via SNF.
    const RatMatrix m_lat = power_sum * g.lattice_basis;
    Integer denom = 1;
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) denom = lcm(denom, m_lat(a, b).get_den());
      denom = lcm(denom, orbit_sum[a].get_den());
    }
    IntMatrix mi(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) mi(a, b) = Rational(m_lat(a, b) * Rational(denom)).get_num();
    const SmithResult snf = smith_normal_form(mi);
    std::vector<Rational> rhs(dim);
    for (std::size_t a = 0; a < dim; ++a) rhs[a] = -orbit_sum[a] * Rational(denom);
    const std::vector<Rational> c = to_rational(snf.u) * rhs;
    bool solvable = true;
    for (std::size_t a = 0; a < dim && solvable; ++a) {
      if (snf.s(a, a) == 0)
        solvable = c[a] == 0;
      else
        solvable = is_integer(c[a] / Rational(snf.s(a, a)));
    }
    if (solvable)
      throw ValidationError("group has torsion: holonomy element " + std::to_string(i) +
                            " admits a finite-order lift");
  }
  return g;
}

/// Self-map data: the affine lift (d,D), the induced holonomy table, and the
/// image subgroup of the pure translations. D singular is supported when
/// explicit images of the lattice generators are provided (experimental).
struct SelfMapData {
  AffineElement lift;
  bool invertible = false;
  std::vector<int> phi;             // phi[i]*D = D*holonomy[i]
  std::vector<int> image_subgroup;  // f_#(Id) as sorted holonomy indices
  std::optional<std::vector<AffineElement>> lattice_images;

  const RatMatrix& linear_power(unsigned long n) const {
    auto it = power_cache_.find(n);
    if (it == power_cache_.end()) it = power_cache_.emplace(n, lift.linear.pow(n)).first;
    return it->second;
  }

 private:
  mutable std::map<unsigned long, RatMatrix> power_cache_;
};

namespace detail {

inline std::vector<int> close_subgroup(const CrystalGroup& g, std::vector<int> gens) {
  std::set<int> members{0};
  std::vector<int> queue{0};
  gens.push_back(0);
  while (!queue.empty()) {
    const int head = queue.back();
    queue.pop_back();
    for (int s : gens) {
      const int next = g.mult[head][s];
      if (members.insert(next).second) queue.push_back(next);
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace detail

/// Derives phi and f_#(Id) for a candidate lift; throws ValidationError when
/// the lift is incompatible with the group. For singular linear parts the
/// caller must supply images of the lattice generators (the reduced basis
/// columns by default, or the original generator list when given).
inline SelfMapData make_self_map(const CrystalGroup& g, const AffineElement& lift,
                                 std::optional<std::vector<AffineElement>> lattice_images = {},
                                 const std::vector<AffineElement>* lattice_generators = nullptr) {
  if (lift.dim() != g.dimension) throw ValidationError("map dimension mismatch");
  SelfMapData f;
  f.lift = lift;
  f.invertible = det(lift.linear) != 0;

  const std::size_t n = g.order();
  f.phi.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const RatMatrix rhs = lift.linear * g.holonomy[i];
    for (std::size_t b = 0; b < n; ++b)
      if (g.holonomy[b] * lift.linear == rhs) {
        f.phi[i] = static_cast<int>(b);
        break;
      }
    if (f.phi[i] < 0) throw ValidationError("map incompatible with group: no induced holonomy image");
  }

  if (f.invertible) {
    f.image_subgroup = {0};
    return f;
  }

  if (!lattice_images) throw ValidationError("f_# data required: map has singular linear part");
  std::vector<AffineElement> gens;
  if (lattice_generators) {
    gens = *lattice_generators;
  } else {
    for (std::size_t j = 0; j < g.dimension; ++j) {
      std::vector<Rational> col(g.dimension);
      for (std::size_t i = 0; i < g.dimension; ++i) col[i] = g.lattice_basis(i, j);
      gens.emplace_back(std::move(col), RatMatrix::identity(g.dimension));
    }
  }
  if (lattice_images->size() != gens.size())
    throw ValidationError("f_# data must provide one image per lattice generator");
  std::vector<int> image_gens;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const AffineElement& img = (*lattice_images)[j];
    if (img.dim() != g.dimension) throw ValidationError("f_# image dimension mismatch");
    const int b = g.index_of(img.linear);
    if (b < 0) throw ValidationError("f_# image linear part is not a holonomy element");
    if (!g.contains(img)) throw ValidationError("f_# image is not a group element");
    // f_*(g_j, Id) (d,D) = (d,D) (g_j, Id) exactly.
    if (compose(img, lift) != compose(lift, gens[j]))
      throw ValidationError("f_# image does not satisfy the intertwining relation");
    image_gens.push_back(b);
  }
  f.lattice_images = std::move(lattice_images);
  f.image_subgroup = detail::close_subgroup(g, std::move(image_gens));
  return f;
}

/// phi^k as an index table.
inline std::vector<int> induced_holonomy_power(const CrystalGroup& g, const SelfMapData& f,
                                               unsigned long k) {
  std::vector<int> table(g.order());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<int>(i);
  for (unsigned long step = 0; step < k; ++step)
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = f.phi[table[i]];
  return table;
}

/// f_#(Id) for the k-th iterate: H_1 = f_#(Id), H_k = <phi(H_{k-1}) u H_1>.
inline std::vector<int> image_subgroup_for_iterate(const CrystalGroup& g, const SelfMapData& f,
                                                   unsigned long k) {
  if (f.invertible) return {0};
  std::vector<int> h = f.image_subgroup;
  for (unsigned long step = 1; step < k; ++step) {
    std::vector<int> gens = f.image_subgroup;
    for (int s : h) gens.push_back(f.phi[s]);
    h = detail::close_subgroup(g, std::move(gens));
  }
  return h;
}

/// f_#(C): the coset phi(C) * f_#(Id), sorted. Singleton {phi(C)} when the
/// linear part is invertible.
inline std::vector<int> image_coset(const CrystalGroup& g, const SelfMapData& f, int c_index) {
  std::set<int> out;
  for (int s : f.image_subgroup) out.insert(g.mult[f.phi[c_index]][s]);
  return {out.begin(), out.end()};
}

struct MapDiagnostics {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks that conjugation by the lift maps every generator of the group
/// back into the group: for each generator gamma there must be some
/// (b,B) in the group with (b,B)(d,D) = (d,D)gamma.
inline MapDiagnostics validate_map_induces(const CrystalGroup& g, const SelfMapData& f) {
  MapDiagnostics report;
  const std::size_t dim = g.dimension;
  const AffineElement& lift = f.lift;

  auto check_generator = [&](const AffineElement& gamma, const std::string& label) {
    const AffineElement target = compose(lift, gamma);  // (d,D) gamma
    std::optional<std::string> first_residual;
    for (std::size_t b = 0; b < g.order(); ++b) {
      if (g.holonomy[b] * lift.linear != target.linear) continue;
      // translation: t + B d = target translation
      std::vector<Rational> t = target.translation;
      const std::vector<Rational> bd = g.holonomy[b] * lift.translation;
      for (std::size_t i = 0; i < dim; ++i) t[i] -= bd[i];
      AffineElement candidate(t, g.holonomy[b]);
      if (g.contains(candidate)) return;  // generator maps into the group
      if (!first_residual) {
        std::vector<Rational> diff = t;
        for (std::size_t i = 0; i < dim; ++i) diff[i] -= g.lifts[b].translation[i];
        const std::vector<Rational> coords = g.lattice_basis_inv * diff;
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < dim; ++i) os << (i ? "," : "") << coords[i];
        os << ")";
        first_residual = os.str();
      }
    }
    report.ok = false;
    report.violations.push_back("generator " + label +
                                (first_residual
                                     ? ": translation residual " + *first_residual + " is not integral"
                                     : ": no holonomy element intertwines its linear part"));
  };

  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rational> col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = g.lattice_basis(i, j);
    check_generator(AffineElement(col, RatMatrix::identity(dim)), "lattice[" + std::to_string(j) + "]");
  }
  for (std::size_t i = 1; i < g.order(); ++i)
    check_generator(g.lifts[i], "holonomy[" + std::to_string(i) + "]");
  return report;
}

}  // namespace infranil
