#pragma once

#include <random>
#include <vector>

#include "checkerboard/checkerboard.hpp"

namespace testutil {

using checkerboard::Int;
using checkerboard::IntMatrix;
using checkerboard::LatticeParams;
using checkerboard::LatticeVector;

inline IntMatrix random_int_matrix(std::mt19937& rng, int rows, int cols, int lo = -5,
                                   int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

struct UnimodularPair {
  IntMatrix w;
  IntMatrix w_inv;
};

/// Random unimodular matrix as a product of elementary shears, swaps, and
/// sign flips, with its inverse maintained alongside.
inline UnimodularPair random_unimodular_pair(std::mt19937& rng, int n, int ops) {
  UnimodularPair p{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n == 1) {
    if (rng() % 2 == 0) {
      p.w(0, 0) = -1;
      p.w_inv(0, 0) = -1;
    }
    return p;
  }
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int t = 0; t < ops; ++t) {
    int i = idx(rng), j = idx(rng);
    switch (rng() % 3) {
      case 0: {
        if (i == j) break;
        Int c = coeff(rng);
        if (c == 0) break;
        p.w.add_row(i, j, c);       // W <- E W
        p.w_inv.add_col(j, i, -c);  // W^-1 <- W^-1 E^-1
        break;
      }
      case 1:
        p.w.swap_rows(i, j);
        p.w_inv.swap_cols(i, j);
        break;
      case 2:
        p.w.negate_row(i);
        for (int r = 0; r < n; ++r) p.w_inv(r, i) = -p.w_inv(r, i);
        break;
    }
  }
  return p;
}

/// Random element of L_{k,m,n}: integer coordinates with the latitude nudged
/// into mZ.
inline LatticeVector random_lattice_vector(std::mt19937& rng, const LatticeParams& p,
                                           int lo = -6, int hi = 6) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Int> c(p.n);
  for (Int& v : c) v = dist(rng);
  Int lat = 0;
  for (const Int& v : c) lat += v;
  Int r = lat % p.m;
  c[0] -= r;  // now m | latitude
  return LatticeVector(std::move(c));
}

}  // namespace testutil
