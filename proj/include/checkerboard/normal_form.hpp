#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "checkerboard/matrix.hpp"
#include "checkerboard/numeric.hpp"

namespace checkerboard {

struct HermiteForm {
  IntMatrix H;  // row-style Hermite normal form
  IntMatrix U;  // unimodular, U * A = H
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot). Works for any shape and rank.
inline HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  HermiteForm r{a, IntMatrix::identity(rows)};
  IntMatrix& h = r.H;
  IntMatrix& u = r.U;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid within the column: repeatedly reduce against the smallest entry.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = pivot_row; i < rows; ++i) {
        if (h(i, col) != 0 && (best == rows || abs(h(i, col)) < abs(h(best, col)))) best = i;
      }
      if (best == rows) break;  // column clear below pivot_row
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool reduced_all = true;
      for (std::size_t i = pivot_row + 1; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        Int q = balanced_div(h(i, col), h(pivot_row, col));
        if (q != 0) {
          h.add_row(i, pivot_row, -q);
          u.add_row(i, pivot_row, -q);
        }
        if (h(i, col) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (h(pivot_row, col) == 0) continue;  // no pivot in this column
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(h(i, col), h(pivot_row, col));
      if (q != 0) {
        h.add_row(i, pivot_row, -q);
        u.add_row(i, pivot_row, -q);
      }
    }
    ++pivot_row;
  }
  return r;
}

struct SmithDecomposition {
  IntMatrix U;  // unimodular row transform
  IntMatrix D;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix V;  // unimodular column transform; U * A * V = D
};

/// Smith normal form by elementary operations. Every pass re-pivots on the
/// smallest nonzero entry of the trailing block and eliminates with balanced
/// quotients, which keeps intermediate entries from swelling.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithDecomposition r{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
  IntMatrix& d = r.D;
  IntMatrix& u = r.U;
  IntMatrix& v = r.V;
  const std::size_t steps = rows < cols ? rows : cols;
  bool exhausted = false;
  for (std::size_t t = 0; t < steps && !exhausted; ++t) {
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) {
        exhausted = true;  // trailing block is zero
        break;
      }
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);
      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = balanced_div(d(i, t), d(t, t));
        if (q != 0) {
          d.add_row(i, t, -q);
          u.add_row(i, t, -q);
        }
        if (d(i, t) != 0) clear = false;  // remainder becomes the next pivot
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = balanced_div(d(t, j), d(t, t));
        if (q != 0) {
          d.add_col(j, t, -q);
          v.add_col(j, t, -q);
        }
        if (d(t, j) != 0) clear = false;
      }
      if (!clear) continue;
      // Row and column t are clear; enforce pivot | trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols && divisible; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            divisible = false;
          }
        }
      }
      if (divisible) break;
    }
  }
  for (std::size_t t = 0; t < steps; ++t) {
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return r;
}

/// Diagonal of the Smith form, length min(rows, cols).
inline std::vector<Int> invariant_factors(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const std::size_t k = a.rows() < a.cols() ? a.rows() : a.cols();
  std::vector<Int> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = s.D(i, i);
  return out;
}

/// Primitive basis of {x in Z^cols : A x = 0}: the Smith column transform
/// restricted to zero invariant factors, hence extendable to a basis of Z^cols.
inline std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const std::size_t steps = a.rows() < a.cols() ? a.rows() : a.cols();
  std::size_t rank = 0;
  while (rank < steps && s.D(rank, rank) != 0) ++rank;
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = rank; j < a.cols(); ++j) {
    std::vector<Int> col(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) col[i] = s.V(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

/// Fraction-free determinant (Bareiss elimination).
inline Int det_bareiss(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    if (a(t, t) == 0) {
      std::size_t p = t + 1;
      while (p < n && a(p, t) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(t, p);
      sign = -sign;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(t, t) - a(i, t) * a(t, j)) / prev;
      }
      a(i, t) = 0;
    }
    prev = a(t, t);
  }
  return sign * a(n - 1, n - 1);
}

/// Exact solution of A x = b over the rationals, if one exists. Free
/// variables are set to zero. nullopt means the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a,
                                                      const std::vector<Rat>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("solve: rhs length mismatch");
  RatMatrix m(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    m.swap_rows(r, p);
    Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j <= cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m(i, cols) != 0) return std::nullopt;
  }
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m(i, cols);
  return x;
}

inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a,
                                                      const std::vector<Int>& b) {
  std::vector<Rat> br(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) br[i] = Rat(b[i]);
  return solve_rational(to_rational(a), br);
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<RatMatrix> inverse_rational(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    m.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rat f = Rat(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= f;
      inv(c, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      Rat g = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= g * m(c, j);
        inv(i, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Inertia of a symmetric matrix by exact congruence diagonalization.
/// Pivots on the first nonzero diagonal entry; when the remaining block has
/// an all-zero diagonal, a hyperbolic row/column addition creates one.
inline Inertia inertia(RatMatrix a) {
  if (!a.is_symmetric()) throw std::invalid_argument("inertia requires a symmetric matrix");
  const std::size_t n = a.rows();
  Inertia out;
  std::size_t t = 0;
  while (t < n) {
    std::size_t p = t;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: look for an off-diagonal entry to split.
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n && bi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi == n) {
        out.zero += n - t;
        break;
      }
      a.add_row(bi, bj, Rat(1));
      a.add_col(bi, bj, Rat(1));  // a(bi,bi) becomes 2*a(bi,bj) != 0
      continue;
    }
    a.swap_rows(t, p);
    a.swap_cols(t, p);
    if (a(t, t) > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    for (std::size_t i = t + 1; i < n; ++i) {
      if (a(i, t) == 0) continue;
      Rat f = a(i, t) / a(t, t);
      a.add_row(i, t, -f);
      a.add_col(i, t, -f);
    }
    ++t;
  }
  return out;
}

inline Inertia inertia(const IntMatrix& a) { return inertia(to_rational(a)); }

}  // namespace checkerboard
