#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace infranil {

inline std::vector<unsigned long> divisors(unsigned long n) {
  if (n == 0) throw std::domain_error("divisors: argument must be positive");
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int moebius(unsigned long n) {
  if (n == 0) throw std::domain_error("moebius: argument must be positive");
  int primes = 0;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++primes;
  }
  if (n > 1) ++primes;
  return primes % 2 == 0 ? 1 : -1;
}

inline unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw std::domain_error("euler_phi: argument must be positive");
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// All orders k whose primitive roots of unity can appear as eigenvalues of
/// an m x m matrix, i.e. phi(k) <= m. The scan bound 2*m^2 + 36 dominates
/// phi(k) > sqrt(k/2).
inline std::vector<unsigned long> root_of_unity_orders(unsigned long m) {
  std::vector<unsigned long> out;
  const unsigned long bound = 2 * m * m + 36;
  for (unsigned long k = 1; k <= bound; ++k)
    if (euler_phi(k) <= m) out.push_back(k);
  return out;
}

}  // namespace infranil
