#pragma once

#include <cstdlib>

#include <infranil/errors.hpp>
#include <infranil/matrix.hpp>
#include <infranil/rational.hpp>

namespace infranil {

/// U * input * V = S with S diagonal, nonnegative, and each diagonal entry
/// dividing the next; U and V unimodular.
struct SmithResult {
  IntMatrix u, s, v;
};

inline SmithResult smith_normal_form(const IntMatrix& input) {
  const std::size_t rows = input.rows(), cols = input.cols();
  SmithResult res{IntMatrix::identity(rows), input, IntMatrix::identity(cols)};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  auto row_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j) s(dst, j) -= q * s(src, j);
    for (std::size_t j = 0; j < rows; ++j) u(dst, j) -= q * u(src, j);
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) s(i, dst) -= q * s(i, src);
    for (std::size_t i = 0; i < cols; ++i) v(i, dst) -= q * v(i, src);
  };
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    s.swap_rows(a, b);
    u.swap_rows(a, b);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    s.swap_cols(a, b);
    v.swap_cols(a, b);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (!found || cmp(abs(s(i, j)), abs(s(pi, pj))) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return res;  // trailing submatrix is zero
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool reduced_something = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        row_sub(i, t, q);
        if (s(i, t) != 0) reduced_something = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        col_sub(j, t, q);
        if (s(t, j) != 0) reduced_something = true;
      }
      if (reduced_something) continue;  // a strictly smaller entry appeared

      // Pivot must divide the whole trailing submatrix for the chain property.
      bool chain_ok = true;
      for (std::size_t i = t + 1; i < rows && chain_ok; ++i)
        for (std::size_t j = t + 1; j < cols && chain_ok; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_sub(t, i, Integer(-1));  // pull the offending row into row t
            chain_ok = false;
          }
      if (chain_ok) break;
    }
    if (s(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) s(t, j) = -s(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  return res;
}

}  // namespace infranil
