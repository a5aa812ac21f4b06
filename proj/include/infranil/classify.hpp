#pragma once

#include <string>

#include <infranil/crystal.hpp>
#include <infranil/nielsen.hpp>
#include <infranil/numtheory.hpp>
#include <infranil/periodic.hpp>
#include <infranil/polynomial.hpp>

namespace infranil {

struct SemiHyperbolicity {
  bool semi_hyperbolic = false;
  unsigned long witness_order = 0;  // cyclotomic index dividing the charpoly, 0 when none
  IntPolynomial witness;
};

/// True iff the linear part has no root-of-unity eigenvalue, decided purely
/// algebraically: no cyclotomic polynomial of candidate order divides the
/// characteristic polynomial. The linear part is conjugated into lattice
/// coordinates first, where compatible invertible maps are integral; a
/// rational-coefficient fallback covers the rest.
inline SemiHyperbolicity is_semi_hyperbolic(const CrystalGroup& g, const SelfMapData& f) {
  const RatMatrix in_lattice = g.lattice_basis_inv * f.lift.linear * g.lattice_basis;
  IntPolynomial p;
  if (is_integral(in_lattice)) {
    p = charpoly(to_integer(in_lattice));
  } else {
    const RatPolynomial pq = charpoly_rational(in_lattice);
    Integer denom = 1;
    for (const Rational& c : pq.coeffs()) denom = lcm(denom, c.get_den());
    std::vector<Integer> scaled(pq.coeffs().size());
    for (std::size_t i = 0; i < scaled.size(); ++i)
      scaled[i] = Rational(pq.coeffs()[i] * Rational(denom)).get_num();
    p = IntPolynomial(std::move(scaled));
  }
  for (unsigned long order : root_of_unity_orders(g.dimension)) {
    const IntPolynomial phi = cyclotomic(order);
    if (divides_monic(phi, p)) return {false, order, phi};
  }
  return {true, 0, {}};
}

/// All determinant terms of the n-th iterate vanish together or not at all.
inline bool is_weakly_jiang(const CrystalGroup& g, const SelfMapData& f, unsigned long n) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (iterate_det(g, f, static_cast<int>(i), n) == 0) ++zeros;
  return zeros == 0 || zeros == g.order();
}

struct NfProfile {
  enum class Verdict { always_equal, differs_at, differs_beyond_bound };
  Verdict verdict = Verdict::always_equal;
  unsigned long first_n = 0;  // set for differs_at
  std::string reason;
};

/// Predicts and verifies whether NF_n = N(f^n) on 1..n_max.
inline NfProfile nf_equals_n_profile(const CrystalGroup& g, const SelfMapData& f,
                                     unsigned long n_max) {
  if (n_max == 0) throw std::domain_error("n_max must be positive");
  const SemiHyperbolicity sh = is_semi_hyperbolic(g, f);
  bool all_zero = true;
  for (unsigned long n = 1; n <= n_max && all_zero; ++n)
    all_zero = nielsen_number(g, f, n) == 0;

  if (sh.semi_hyperbolic || all_zero) {
    for (unsigned long n = 1; n <= n_max; ++n)
      if (nf(g, f, n) != nielsen_number(g, f, n))
        throw StructureError("predicted NF_n = N(f^n) failed at n=" + std::to_string(n));
    NfProfile out;
    out.verdict = NfProfile::Verdict::always_equal;
    out.reason = sh.semi_hyperbolic ? "semi-hyperbolic"
                                    : "all Nielsen numbers vanish up to the tested bound";
    return out;
  }
  for (unsigned long n = 1; n <= n_max; ++n) {
    if (nf(g, f, n) > nielsen_number(g, f, n)) {
      NfProfile out;
      out.verdict = NfProfile::Verdict::differs_at;
      out.first_n = n;
      out.reason = "not semi-hyperbolic (witness order " + std::to_string(sh.witness_order) + ")";
      return out;
    }
  }
  NfProfile out;
  out.verdict = NfProfile::Verdict::differs_beyond_bound;
  out.reason = "guaranteed to differ beyond tested bound";
  return out;
}

enum class WeckenVerdict { wecken_every_level, not_wecken_somewhere, all_nielsen_zero };

/// Dichotomy for affine maps: with some nonzero Nielsen number in sight, the
/// map is Wecken at every level iff it is semi-hyperbolic.
inline WeckenVerdict wecken_prediction(const CrystalGroup& g, const SelfMapData& f,
                                       unsigned long scan_bound = 12) {
  bool some_nonzero = false;
  for (unsigned long k = 1; k <= scan_bound && !some_nonzero; ++k)
    some_nonzero = nielsen_number(g, f, k) != 0;
  if (!some_nonzero) return WeckenVerdict::all_nielsen_zero;
  return is_semi_hyperbolic(g, f).semi_hyperbolic ? WeckenVerdict::wecken_every_level
                                                  : WeckenVerdict::not_wecken_somewhere;
}

}  // namespace infranil
