#pragma once

#include <vector>

#include "checkerboard/errors.hpp"
#include "checkerboard/lattice.hpp"
#include "checkerboard/matrix.hpp"
#include "checkerboard/numeric.hpp"

namespace checkerboard {

/// The opposite-lattice map theta_{m,n}(x) = x - (lat(x)/m)(e_1 + ... + e_n),
/// defined on all of Q^n. Restricted to L_{k,m,n} (m != n) it is an isometry
/// onto L_{k,n-m,n}; it fixes the latitude-zero base lattice pointwise.
inline std::vector<Rat> theta(const LatticeParams& p, const std::vector<Rat>& x) {
  if (static_cast<int>(x.size()) != p.n) {
    throw std::invalid_argument("vector dimension does not match rank");
  }
  Rat lat(0);
  for (const Rat& c : x) lat += c;
  Rat shift = lat / Rat(p.m);
  std::vector<Rat> out(x);
  for (Rat& c : out) c -= shift;
  return out;
}

inline std::vector<Rat> to_rat(const LatticeVector& v) {
  std::vector<Rat> out(v.coords().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline std::vector<Rat> theta(const LatticeParams& p, const LatticeVector& v) {
  return theta(p, to_rat(v));
}

/// theta image of a lattice element, which has integer coordinates whenever
/// lat(v) is divisible by m.
inline LatticeVector theta_lattice(const LatticeParams& p, const LatticeVector& v) {
  std::vector<Rat> img = theta(p, v);
  std::vector<Int> c(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) c[i] = to_int(img[i]);
  return LatticeVector(std::move(c));
}

/// (k, n-m, n); undefined for m = n where theta is not invertible.
inline LatticeParams opposite_params(const LatticeParams& p) {
  if (p.m == p.n) throw OppositeUndefinedError();
  return LatticeParams(p.k, Int(p.n) - p.m, p.n);
}

/// Gram matrix of the dual basis e^1, ..., e^n:
/// (e^i|e^j) = delta_ij - (k-m)/det, the inverse of the form matrix B.
inline RatMatrix dual_gram(const LatticeParams& p) {
  Int det = det_lattice(p);
  if (det == 0) throw DegenerateFormError();
  RatMatrix c(p.n, p.n, -make_rat(p.k - p.m, det));
  for (int i = 0; i < p.n; ++i) c(i, i) += 1;
  return c;
}

/// Generators e^0, e^1, ..., e^n of the dual lattice, in standard
/// e-coordinates: e^i is row i of B^{-1} and e^0 = (1/m)(e^1 + ... + e^n).
inline std::vector<std::vector<Rat>> dual_generators(const LatticeParams& p) {
  RatMatrix c = dual_gram(p);
  std::vector<std::vector<Rat>> gens;
  gens.reserve(p.n + 1);
  std::vector<Rat> e0(p.n, Rat(0));
  for (int i = 0; i < p.n; ++i) {
    std::vector<Rat> row = c.row(i);
    for (int j = 0; j < p.n; ++j) e0[j] += row[j];
    gens.push_back(std::move(row));
  }
  for (Rat& v : e0) v /= Rat(p.m);
  gens.insert(gens.begin(), std::move(e0));
  return gens;
}

/// Form value extended to rational vectors.
inline Rat inner_rat(const LatticeParams& p, const std::vector<Rat>& x,
                     const std::vector<Rat>& y) {
  if (static_cast<int>(x.size()) != p.n || static_cast<int>(y.size()) != p.n) {
    throw std::invalid_argument("vector dimension does not match rank");
  }
  Rat d(0), lx(0), ly(0);
  for (int i = 0; i < p.n; ++i) {
    d += x[i] * y[i];
    lx += x[i];
    ly += y[i];
  }
  return d + lx * ly * Rat(p.k - p.m, p.m * p.m);
}

/// z_j = (m-k)(e_1 + ... + e_n) + (det L) e_j, the integer lattice vector
/// with (e_i|z_j) = (det L) delta_ij. Well-defined also when det = 0.
inline LatticeVector z_vector(const LatticeParams& p, int j) {
  if (j < 1 || j > p.n) throw std::invalid_argument("z_vector index out of range");
  Int det = det_lattice(p);
  std::vector<Int> c(p.n, p.m - p.k);
  c[j - 1] += det;
  return LatticeVector(std::move(c));
}

/// w_j = z_j / det, the dual vector with (e_i|w_j) = delta_ij.
inline std::vector<Rat> dual_weight(const LatticeParams& p, int j) {
  Int det = det_lattice(p);
  if (det == 0) throw DegenerateFormError();
  LatticeVector z = z_vector(p, j);
  std::vector<Rat> out(p.n);
  for (int i = 0; i < p.n; ++i) out[i] = make_rat(z[i], det);
  return out;
}

}  // namespace checkerboard
