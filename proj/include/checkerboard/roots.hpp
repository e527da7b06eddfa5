#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "checkerboard/classify.hpp"
#include "checkerboard/duality.hpp"
#include "checkerboard/errors.hpp"
#include "checkerboard/lattice.hpp"
#include "checkerboard/numeric.hpp"

namespace checkerboard {

/// Coordinate-multiset signature of a vector: counts[j] = number of
/// coordinates equal to j, over nonzero j; zeros are implied by the ambient
/// rank. Printed in the style "(-1)^1 1^1".
struct ShapeSignature {
  std::map<int, int> counts;
  int ambient = 0;

  Int shape_latitude() const {
    Int s = 0;
    for (const auto& [j, d] : counts) s += Int(j) * d;
    return s;
  }

  Int euclidean_norm() const {
    Int s = 0;
    for (const auto& [j, d] : counts) s += Int(j) * j * d;
    return s;
  }

  int support() const {
    int s = 0;
    for (const auto& [j, d] : counts) s += d;
    return s;
  }

  /// Number of vectors of this shape: the multinomial n!/(d_0! prod d_j!).
  Int multiplicity() const {
    Int m = factorial(ambient);
    m /= factorial(ambient - support());
    for (const auto& [j, d] : counts) m /= factorial(d);
    return m;
  }

  std::string str() const {
    if (counts.empty()) return "(0^" + std::to_string(ambient) + ")";
    std::string s;
    for (const auto& [j, d] : counts) {
      if (!s.empty()) s += ' ';
      if (j < 0) {
        s += "(" + std::to_string(j) + ")^" + std::to_string(d);
      } else {
        s += std::to_string(j) + "^" + std::to_string(d);
      }
    }
    return s;
  }

  bool operator==(const ShapeSignature& o) const { return counts == o.counts; }
  bool operator<(const ShapeSignature& o) const { return counts < o.counts; }
};

struct ShellRow {
  Int latitude;
  ShapeSignature shape;
  Int count;
};

/// Norm-shell table grouped by latitude (descending) and shape.
struct ShellTable {
  std::vector<ShellRow> rows;
  Int total = 0;
};

namespace detail {

struct ShapeSearch {
  int n;
  Int target_lat;
  std::vector<int> values;  // candidate coordinate values, positives then negatives
  std::vector<std::pair<ShapeSignature, Int>>* out;
  std::map<int, int> current;

  void run(std::size_t idx, int slots_left, Int lat_left, Int norm_left) {
    if (norm_left == 0 && lat_left == 0) {
      ShapeSignature s{current, n};
      out->emplace_back(s, s.multiplicity());
      return;
    }
    if (idx == values.size()) return;
    // Cauchy-Schwarz: lat_left^2 <= slots_left * norm_left is necessary.
    if (lat_left * lat_left > Int(slots_left) * norm_left) return;
    int j = values[idx];
    if (j < 0 && lat_left > 0) return;  // remaining values only lower the latitude
    if (j > 0 && lat_left > Int(j) * slots_left) return;
    Int jj = Int(j) * j;
    int d_max = slots_left;
    if (jj * d_max > norm_left) d_max = static_cast<int>(norm_left / jj);
    for (int d = d_max; d >= 0; --d) {
      if (d > 0) current[j] = d;
      run(idx + 1, slots_left - d, lat_left - Int(j) * d, norm_left - jj * d);
      if (d > 0) current.erase(j);
    }
  }
};

}  // namespace detail

/// All shapes of vectors x in L_{k,m,n} with |x|^2 = N and latitude h*m,
/// with their exact multiplicities. A shape must satisfy
///   sum j d_j = h m   and   sum j^2 d_j = N - h^2 (k - m),
/// the latter being the Euclidean part of the norm on the shell.
inline std::vector<std::pair<ShapeSignature, Int>> shapes_of_norm(const LatticeParams& p,
                                                                  const Int& N, const Int& h) {
  if (N < 0) throw std::invalid_argument("shapes_of_norm requires N >= 0");
  std::vector<std::pair<ShapeSignature, Int>> out;
  Int euclid = N - h * h * (p.k - p.m);
  Int lat = h * p.m;
  if (euclid < 0) return out;
  if (lat * lat > Int(p.n) * euclid) return out;  // Cauchy-Schwarz infeasible
  Int j_hi = isqrt(euclid);
  std::vector<int> values;
  for (Int j = j_hi; j >= 1; --j) values.push_back(static_cast<int>(j));
  for (Int j = 1; j <= j_hi; ++j) values.push_back(static_cast<int>(-j));
  detail::ShapeSearch search{p.n, lat, values, &out, {}};
  search.run(0, p.n, lat, euclid);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace detail {

/// Largest h >= 0 with h^2 * det <= n * N (valid when det > 0).
inline Int shell_bound(const LatticeParams& p, const Int& N) {
  Int det = det_lattice(p);
  Int cap = Int(p.n) * N;
  if (cap < 0) return -1;
  Int h = isqrt(cap / det);
  while ((h + 1) * (h + 1) * det <= cap) ++h;
  while (h > 0 && h * h * det > cap) --h;
  return h;
}

}  // namespace detail

/// Full table of norm-2 vectors by latitude shell and shape. For
/// positive-definite parameters the shell range |h| <= sqrt(nN/det) follows
/// from lat(x)^2 <= n (x.x); otherwise a caller-supplied bound on |h| is
/// required.
inline ShellTable root_table(const LatticeParams& p,
                             std::optional<Int> shell_bound = std::nullopt) {
  const Int N = 2;
  Int h_max;
  if (det_lattice(p) > 0) {
    h_max = detail::shell_bound(p, N);
  } else if (shell_bound) {
    h_max = abs(*shell_bound);
  } else {
    throw IndefiniteWithoutBoundError();
  }
  ShellTable table;
  for (Int h = h_max; h >= -h_max; --h) {
    for (auto& [shape, count] : shapes_of_norm(p, N, h)) {
      table.rows.push_back({h * p.m, shape, count});
      table.total += count;
    }
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const ShellRow& a, const ShellRow& b) {
    return a.latitude != b.latitude ? a.latitude > b.latitude : a.shape < b.shape;
  });
  return table;
}

namespace detail {

inline void expand_shape(const ShapeSignature& shape, std::vector<LatticeVector>* out) {
  std::vector<int> pattern(shape.ambient, 0);
  int pos = 0;
  for (const auto& [j, d] : shape.counts) {
    for (int i = 0; i < d; ++i) pattern[pos++] = j;
  }
  std::sort(pattern.begin(), pattern.end());
  do {
    std::vector<Int> coords(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) coords[i] = pattern[i];
    out->push_back(LatticeVector(std::move(coords)));
  } while (std::next_permutation(pattern.begin(), pattern.end()));
}

}  // namespace detail

constexpr int kRootEnumerationRankLimit = 16;

/// Explicit list of all norm-2 vectors, expanded shell by shell.
inline std::vector<LatticeVector> enumerate_roots(const LatticeParams& p,
                                                  std::optional<Int> shell_bound = std::nullopt) {
  if (p.n > kRootEnumerationRankLimit) {
    throw RankTooLargeError(p.n, kRootEnumerationRankLimit);
  }
  ShellTable table = root_table(p, shell_bound);
  std::vector<LatticeVector> roots;
  for (const ShellRow& row : table.rows) detail::expand_shape(row.shape, &roots);
  return roots;
}

/// Reflection in a root: v - (v|alpha) alpha. Preserves the form and the
/// lattice.
inline LatticeVector reflect(const LatticeParams& p, const LatticeVector& alpha,
                             const LatticeVector& v) {
  if (inner(p, alpha, alpha) != 2) {
    throw std::invalid_argument("reflection axis must be a root (norm 2)");
  }
  Int c = inner_int(p, v, alpha);
  return v - c * alpha;
}

namespace detail {

/// Orbit of `start` under all reflections in `roots`, by BFS closure.
inline std::set<LatticeVector> reflection_orbit(const LatticeParams& p,
                                                const std::vector<LatticeVector>& roots,
                                                const LatticeVector& start) {
  // Integer-only form evaluation: m | lat for all lattice vectors here.
  auto pairing = [&p](const LatticeVector& x, const LatticeVector& y) {
    return dot(x.coords(), y.coords()) +
           (x.latitude() / p.m) * (y.latitude() / p.m) * (p.k - p.m);
  };
  std::set<LatticeVector> seen{start};
  std::queue<LatticeVector> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    LatticeVector x = frontier.front();
    frontier.pop();
    for (const LatticeVector& r : roots) {
      Int c = pairing(x, r);
      if (c == 0) continue;
      LatticeVector y = x - c * r;
      if (seen.insert(y).second) frontier.push(y);
    }
  }
  return seen;
}

}  // namespace detail

/// c_n: the size of the Weyl-group orbit of z_n, computed as the reflection
/// closure over all roots of the given realization.
inline Int weyl_orbit_size(const LatticeParams& p) {
  if (classify_root_lattice(p).family == RootFamily::None) {
    throw NotARootLatticeError(p.str() + " is not a root lattice");
  }
  std::vector<LatticeVector> roots = enumerate_roots(p);
  LatticeVector z = z_vector(p, p.n);
  return Int(detail::reflection_orbit(p, roots, z).size());
}

/// Weyl group order with the orbit recursion |W(X_n)| = c_n |W(X_{n-1})|.
struct WeylOrder {
  Int order;
  std::string family;                     // "A", "D", "E", or "A+A1"
  std::vector<std::pair<int, Int>> chain; // (rank j, c_j), ascending j
  Int seed;                               // |W| at the bottom of the recursion
  int seed_rank;
};

/// Orders computed recursively within each family: A down to A_1 (order 2),
/// D down to D_2 (order 4), E down to E_3 (order 12). The m = n case
/// A_{n-1} + A_1 multiplies the recursive A-order by 2.
inline WeylOrder weyl_order(const LatticeParams& p) {
  RootLatticeLabel label = classify_root_lattice(p);
  auto run_chain = [](const Int& m, int j_lo, int rank, Int seed,
                      int seed_rank) -> WeylOrder {
    WeylOrder w{std::move(seed), "", {}, Int(0), seed_rank};
    w.seed = w.order;
    for (int j = j_lo; j <= rank; ++j) {
      Int c = weyl_orbit_size(LatticeParams(2, m, j));
      w.order *= c;
      w.chain.emplace_back(j, std::move(c));
    }
    return w;
  };
  switch (label.family) {
    case RootFamily::A: {
      WeylOrder w = run_chain(1, 2, label.rank, Int(2), 1);
      w.family = "A";
      return w;
    }
    case RootFamily::D: {
      WeylOrder w = run_chain(2, 3, label.rank, Int(4), 2);
      w.family = "D";
      return w;
    }
    case RootFamily::E: {
      WeylOrder w = run_chain(3, 4, label.rank, Int(12), 3);
      w.family = "E";
      return w;
    }
    case RootFamily::AplusA1: {
      WeylOrder w = run_chain(1, 2, label.rank, Int(2), 1);
      w.order *= 2;
      w.family = "A+A1";
      return w;
    }
    case RootFamily::None:
      break;
  }
  throw NotARootLatticeError(p.str() + " is not a root lattice");
}

}  // namespace checkerboard
