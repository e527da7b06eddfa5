#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "checkerboard/errors.hpp"
#include "checkerboard/lattice.hpp"
#include "checkerboard/matrix.hpp"
#include "checkerboard/roots.hpp"

namespace checkerboard {

/// n points 1..n and a list of blocks. Valid symmetric 2-designs have n
/// blocks of a common size meeting pairwise in a constant number of points.
struct SymmetricDesign {
  int n = 0;
  std::vector<std::vector<int>> blocks;
};

struct DesignParams {
  int n = 0;
  int m = 0;
  int lambda = 0;
  bool operator==(const DesignParams&) const = default;
};

/// Checks the symmetric 2-design invariants and returns (n, m, lambda).
/// Throws DesignError naming the first violated clause.
inline DesignParams verify_design(const SymmetricDesign& d) {
  if (static_cast<int>(d.blocks.size()) != d.n) {
    throw DesignError(DesignFault::BlockCountMismatch,
                      "expected " + std::to_string(d.n) + " blocks, got " +
                          std::to_string(d.blocks.size()));
  }
  std::vector<std::set<int>> blocks;
  for (const auto& b : d.blocks) {
    std::set<int> s(b.begin(), b.end());
    if (s.size() != b.size() || (!s.empty() && (*s.begin() < 1 || *s.rbegin() > d.n))) {
      throw DesignError(DesignFault::InvalidBlock,
                        "blocks must be sets of points in 1.." + std::to_string(d.n));
    }
    blocks.push_back(std::move(s));
  }
  const int m = blocks.empty() ? 0 : static_cast<int>(blocks.front().size());
  for (const auto& b : blocks) {
    if (static_cast<int>(b.size()) != m) {
      throw DesignError(DesignFault::BlockSizeMismatch, "blocks have differing sizes");
    }
  }
  std::optional<int> lambda;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(),
                            blocks[j].end(), std::back_inserter(meet));
      int cut = static_cast<int>(meet.size());
      if (!lambda) {
        lambda = cut;
      } else if (*lambda != cut) {
        throw DesignError(DesignFault::IntersectionNotConstant,
                          "blocks " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " meet in " + std::to_string(cut) + " points, expected " +
                              std::to_string(*lambda));
      }
    }
  }
  return {d.n, m, lambda.value_or(0)};
}

/// The Fano plane, the 2-(7,3,1) design.
inline SymmetricDesign fano() {
  return {7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}};
}

/// Sylvester Hadamard matrix of order 2^t (tensor powers of the order-2 one).
inline IntMatrix sylvester_hadamard(int t) {
  if (t < 1) throw std::invalid_argument("sylvester_hadamard requires t >= 1");
  IntMatrix h{{1, 1}, {1, -1}};
  for (int step = 1; step < t; ++step) {
    std::size_t n = h.rows();
    IntMatrix next(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        next(i, j) = h(i, j);
        next(i, j + n) = h(i, j);
        next(i + n, j) = h(i, j);
        next(i + n, j + n) = -h(i, j);
      }
    }
    h = std::move(next);
  }
  return h;
}

/// Paley Hadamard matrix of order q+1 for a prime q = 3 (mod 4), built from
/// the quadratic-residue (Jacobsthal) matrix.
inline IntMatrix paley_hadamard(int q) {
  if (q < 3) throw std::invalid_argument("paley_hadamard requires a prime q >= 3");
  for (int f = 2; f * f <= q; ++f) {
    if (q % f == 0) throw std::invalid_argument("paley_hadamard requires q prime");
  }
  if (q % 4 != 3) throw std::invalid_argument("paley_hadamard requires q = 3 (mod 4)");
  std::vector<int> chi(q, -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[(x * x) % q] = 1;
  const int n = q + 1;
  IntMatrix h(n, n);
  h(0, 0) = 1;
  for (int j = 1; j < n; ++j) {
    h(0, j) = 1;
    h(j, 0) = -1;
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      h(i, j) = i == j ? Int(1) : Int(chi[((i - j) % q + q) % q]);
    }
  }
  return h;
}

/// The symmetric 2-(4k-1, 2k-1, k-1) design carried by a Hadamard matrix of
/// order 4k: normalize the first row and column to +1, drop them, and read
/// each remaining row's +1 positions as a block.
inline SymmetricDesign design_from_hadamard(IntMatrix h) {
  const std::size_t n = h.rows();
  if (n != h.cols() || n < 4 || n % 4 != 0) {
    throw NotHadamardError("expected a square matrix of order 4k");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (h(i, j) != 1 && h(i, j) != -1) throw NotHadamardError("entries must be +-1");
    }
  }
  IntMatrix prod = h * h.transposed();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (prod(i, j) != (i == j ? Int(n) : Int(0))) {
        throw NotHadamardError("H * H^T is not (4k) I");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (h(i, 0) == -1) h.negate_row(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (h(0, j) == -1) {
      for (std::size_t i = 0; i < n; ++i) h(i, j) = -h(i, j);
    }
  }
  SymmetricDesign d;
  d.n = static_cast<int>(n) - 1;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<int> block;
    for (std::size_t j = 1; j < n; ++j) {
      if (h(i, j) == 1) block.push_back(static_cast<int>(j));
    }
    d.blocks.push_back(std::move(block));
  }
  verify_design(d);
  return d;
}

/// Blockwise complement; a 2-(n,m,l) design becomes 2-(n, n-m, n-2m+l).
inline SymmetricDesign complement_design(const SymmetricDesign& d) {
  verify_design(d);
  SymmetricDesign c{d.n, {}};
  for (const auto& b : d.blocks) {
    std::set<int> s(b.begin(), b.end());
    std::vector<int> comp;
    for (int x = 1; x <= d.n; ++x) {
      if (!s.count(x)) comp.push_back(x);
    }
    c.blocks.push_back(std::move(comp));
  }
  return c;
}

/// n pairwise-orthogonal vectors of squared norm `norm` in L_params.
struct Frame {
  LatticeParams params;
  Int norm;
  std::vector<LatticeVector> vectors;
};

struct FrameCheck {
  bool ok = true;
  std::string detail;
};

/// Re-derives the frame invariants from scratch: vector count equals the
/// rank, membership, and Gram exactly norm * I.
inline FrameCheck verify_frame(const Frame& f) {
  const int n = f.params.n;
  if (static_cast<int>(f.vectors.size()) != n) {
    return {false, "expected " + std::to_string(n) + " vectors, got " +
                       std::to_string(f.vectors.size())};
  }
  for (int i = 0; i < n; ++i) {
    if (f.vectors[i].dimension() != n) return {false, "vector " + std::to_string(i + 1) +
                                                          " has wrong dimension"};
    if (!contains(f.params, f.vectors[i])) {
      return {false, "vector " + std::to_string(i + 1) + " = " + f.vectors[i].str() +
                         " is not in " + f.params.str()};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rat v = inner(f.params, f.vectors[i], f.vectors[j]);
      Rat want = i == j ? Rat(f.norm) : Rat(0);
      if (v != want) {
        return {false, "(v_" + std::to_string(i + 1) + "|v_" + std::to_string(j + 1) +
                           ") = " + v.str() + ", expected " + want.str()};
      }
    }
  }
  return {true, ""};
}

/// E(B): the orthogonal (m - lambda)-frame of L_{m-lambda, m, n} attached to
/// a symmetric 2-(n, m, lambda) design, with vectors e_I over the blocks.
inline Frame frame_from_design(const SymmetricDesign& d) {
  DesignParams dp = verify_design(d);
  if (dp.m < 1 || dp.m > dp.n - 1) {
    throw PreconditionError("frame requires a design with 1 <= m <= n-1");
  }
  Int k = Int(dp.m) - dp.lambda;
  if (k <= 0) throw PreconditionError("design gives nonpositive frame norm k = " + k.str());
  LatticeParams params(k, dp.m, dp.n);
  Frame f{params, k, {}};
  for (const auto& block : d.blocks) {
    f.vectors.push_back(LatticeVector::indicator(dp.n, block));
  }
  return f;
}

/// The 2-frame of L_{k,2k-1,4k} (the D^+_{4k} construction): the 2k vectors
/// e_{X \ {2i-1,2i}} together with the 2k differences e_{2i-1} - e_{2i}.
inline Frame dplus_frame(int k) {
  if (k < 1) throw std::invalid_argument("dplus_frame requires k >= 1");
  const int n = 4 * k;
  LatticeParams params(k, 2 * k - 1, n);
  Frame f{params, 2, {}};
  for (int i = 1; i <= 2 * k; ++i) {
    std::vector<int> support;
    for (int x = 1; x <= n; ++x) {
      if (x != 2 * i - 1 && x != 2 * i) support.push_back(x);
    }
    f.vectors.push_back(LatticeVector::indicator(n, support));
  }
  for (int i = 1; i <= 2 * k; ++i) {
    f.vectors.push_back(LatticeVector::unit(n, 2 * i - 1) - LatticeVector::unit(n, 2 * i));
  }
  return f;
}

/// The 2-frame e_1 +- e_2, ..., e_{n-1} +- e_n of L_{2,2,n} = D_n (n even).
inline Frame dn_frame(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("dn_frame requires even n >= 2");
  LatticeParams params(2, 2, n);
  Frame f{params, 2, {}};
  for (int i = 1; i <= n; i += 2) {
    LatticeVector a = LatticeVector::unit(n, i);
    LatticeVector b = LatticeVector::unit(n, i + 1);
    f.vectors.push_back(a + b);
    f.vectors.push_back(a - b);
  }
  return f;
}

/// The 2-frame of L_{2,3,8} = E_8: the seven Fano-plane vectors embedded in
/// the first seven coordinates plus the unique (up to sign) root orthogonal
/// to all of them, found by searching the 240 roots.
inline Frame e8_frame() {
  LatticeParams params(2, 3, 8);
  Frame f{params, 2, {}};
  for (const auto& block : fano().blocks) {
    f.vectors.push_back(LatticeVector::indicator(8, block));
  }
  std::vector<LatticeVector> matches;
  for (const LatticeVector& r : enumerate_roots(params)) {
    bool orthogonal = true;
    for (const LatticeVector& v : f.vectors) {
      if (inner(params, r, v) != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) matches.push_back(r);
  }
  if (matches.size() != 2 || matches[0] != -matches[1]) {
    throw InternalInconsistencyError(
        "expected exactly one +- pair of roots orthogonal to the embedded Fano frame");
  }
  f.vectors.push_back(std::max(matches[0], matches[1]));
  return f;
}

}  // namespace checkerboard
