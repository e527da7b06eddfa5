#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "checkerboard/errors.hpp"
#include "checkerboard/matrix.hpp"
#include "checkerboard/normal_form.hpp"
#include "checkerboard/numeric.hpp"

namespace checkerboard {

/// The triple (k, m, n) naming a lattice L_{k,m,n}: the rank-n sublattice of
/// Z^n of latitude divisible by m, with the bilinear form
///   (x|y) = x.y + lat(x) lat(y) (k - m) / m^2.
struct LatticeParams {
  Int k;
  Int m;
  int n;

  LatticeParams(Int k_, Int m_, int n_) : k(std::move(k_)), m(std::move(m_)), n(n_) {
    if (m == 0) throw std::invalid_argument("lattice parameter m must be nonzero");
    if (n < 1) throw std::invalid_argument("lattice rank n must be at least 1");
  }

  bool operator==(const LatticeParams&) const = default;

  std::string str() const {
    return "L(" + k.str() + "," + m.str() + "," + std::to_string(n) + ")";
  }
};

/// Integer coordinate vector in the ambient rank-n module. The latitude
/// (coordinate sum) is computed on construction and kept in sync.
class LatticeVector {
 public:
  LatticeVector() = default;

  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {
    for (const Int& c : coords_) latitude_ += c;
  }

  static LatticeVector zero(int n) { return LatticeVector(std::vector<Int>(n)); }

  /// Standard basis vector e_i, 1-based.
  static LatticeVector unit(int n, int i) {
    std::vector<Int> c(n);
    c.at(i - 1) = 1;
    return LatticeVector(std::move(c));
  }

  /// e_{i_1} + ... over a 1-based index set.
  static LatticeVector indicator(int n, const std::vector<int>& support) {
    std::vector<Int> c(n);
    for (int i : support) c.at(i - 1) += 1;
    return LatticeVector(std::move(c));
  }

  const std::vector<Int>& coords() const { return coords_; }
  const Int& latitude() const { return latitude_; }
  int dimension() const { return static_cast<int>(coords_.size()); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }

  LatticeVector operator+(const LatticeVector& rhs) const {
    check_dim(rhs);
    std::vector<Int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += rhs.coords_[i];
    return LatticeVector(std::move(c));
  }

  LatticeVector operator-(const LatticeVector& rhs) const {
    check_dim(rhs);
    std::vector<Int> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= rhs.coords_[i];
    return LatticeVector(std::move(c));
  }

  LatticeVector operator-() const {
    std::vector<Int> c(coords_);
    for (Int& v : c) v = -v;
    return LatticeVector(std::move(c));
  }

  friend LatticeVector operator*(const Int& s, const LatticeVector& v) {
    std::vector<Int> c(v.coords_);
    for (Int& x : c) x *= s;
    return LatticeVector(std::move(c));
  }

  bool operator==(const LatticeVector& rhs) const { return coords_ == rhs.coords_; }
  auto operator<=>(const LatticeVector& rhs) const { return coords_ <=> rhs.coords_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].str();
    }
    return s + ")";
  }

 private:
  void check_dim(const LatticeVector& rhs) const {
    if (coords_.size() != rhs.coords_.size()) {
      throw std::invalid_argument("lattice vector dimension mismatch");
    }
  }

  std::vector<Int> coords_;
  Int latitude_ = 0;
};

inline const Int& latitude(const LatticeVector& v) { return v.latitude(); }

/// Membership test: v lies in L_{k,m,n} iff its latitude is divisible by m.
inline bool contains(const LatticeParams& p, const LatticeVector& v) {
  if (v.dimension() != p.n) throw std::invalid_argument("vector dimension does not match rank");
  return v.latitude() % p.m == 0;
}

/// The bilinear form on Q^n. Exact rational; integral on lattice elements.
inline Rat inner(const LatticeParams& p, const LatticeVector& x, const LatticeVector& y) {
  if (x.dimension() != p.n || y.dimension() != p.n) {
    throw std::invalid_argument("vector dimension does not match rank");
  }
  Int d = dot(x.coords(), y.coords());
  return Rat(d) + Rat(x.latitude() * y.latitude() * (p.k - p.m), p.m * p.m);
}

/// Form value known to be integral (both vectors in the lattice).
inline Int inner_int(const LatticeParams& p, const LatticeVector& x, const LatticeVector& y) {
  return to_int(inner(p, x, y));
}

/// Matrix B of the form on Q^n w.r.t. the standard basis:
/// B = I + (k-m)/m^2 J.
inline RatMatrix form_matrix(const LatticeParams& p) {
  RatMatrix b(p.n, p.n, Rat(p.k - p.m, p.m * p.m));
  for (int i = 0; i < p.n; ++i) b(i, i) += 1;
  return b;
}

/// Gram matrix w.r.t. the lattice basis (m e_1, e_2 - e_1, ..., e_n - e_{n-1}).
inline IntMatrix gram_matrix(const LatticeParams& p) {
  IntMatrix g(p.n, p.n);
  g(0, 0) = p.m * p.m - p.m + p.k;
  if (p.n > 1) {
    g(0, 1) = -p.m;
    g(1, 0) = -p.m;
  }
  for (int i = 1; i < p.n; ++i) {
    g(i, i) = 2;
    if (i + 1 < p.n) {
      g(i, i + 1) = -1;
      g(i + 1, i) = -1;
    }
  }
  return g;
}

/// det L_{k,m,n} = m^2 - mn + kn.
inline Int det_lattice(const LatticeParams& p) { return p.m * p.m - p.m * p.n + p.k * p.n; }

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Signature (positive, negative, zero), computed by exact congruence
/// diagonalization of the Gram matrix. For these lattices it always comes out
/// as one of (n,0,0), (n-1,0,1), (n-1,1,0) according to the sign of the
/// determinant, since the base lattice A_{n-1} is positive-definite.
inline Signature signature(const LatticeParams& p) {
  Inertia in = inertia(gram_matrix(p));
  return {static_cast<int>(in.positive), static_cast<int>(in.negative),
          static_cast<int>(in.zero)};
}

/// Canonical parameters: 1 <= m <= n, and additionally m <= n - m whenever
/// m <= n - 1. Uses the identities L_{k,m,n} = L_{k-2m,-m,n} (same lattice)
/// and L_{k,m,n} ~ L_{k,n-m,n} (opposite isometry). Preserves det_lattice.
inline LatticeParams normalize_params(const LatticeParams& p) {
  Int k = p.k, m = p.m;
  const int n = p.n;
  if (m < 0) {
    k = k - 2 * m;
    m = -m;
  }
  while (m > n) {
    // opposite (m -> n-m < 0) followed by the sign fix; drops m by n
    k = k + 2 * (m - n);
    m = m - n;
  }
  if (m <= n - 1 && 2 * m > n) {
    m = n - m;
  }
  return LatticeParams(std::move(k), std::move(m), n);
}

/// Canonical representative of the coset L_{k,m,n}[h] of latitude h:
/// (h/m)(e_1 + ... + e_m) when 1 <= m <= n, otherwise h e_1.
inline LatticeVector coset_representative(const LatticeParams& p, const Int& h) {
  if (h % p.m != 0) {
    throw PreconditionError("coset latitude " + h.str() + " is not divisible by m = " +
                            p.m.str());
  }
  std::vector<Int> c(p.n);
  if (p.m >= 1 && p.m <= p.n) {
    Int t = h / p.m;
    for (int i = 0; i < static_cast<int>(p.m); ++i) c[i] = t;
  } else {
    c[0] = h;
  }
  return LatticeVector(std::move(c));
}

}  // namespace checkerboard
