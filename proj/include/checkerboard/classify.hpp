#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "checkerboard/lattice.hpp"
#include "checkerboard/numeric.hpp"

namespace checkerboard {

/// Witness for det = m^2 - mn + kn: integers with k^2 - d = pq, m = k + p,
/// n = 2k + p + q.
struct DetWitness {
  Int p;
  Int q;
  bool operator==(const DetWitness&) const = default;
};

struct DetSolution {
  Int m;
  int n;
  DetWitness witness;
};

namespace detail {

inline std::vector<Int> divisors(const Int& v) {
  std::vector<Int> out;
  Int a = abs(v);
  for (Int e = 1; e * e <= a; ++e) {
    if (a % e == 0) {
      out.push_back(e);
      if (e * e != a) out.push_back(a / e);
    }
  }
  return out;
}

}  // namespace detail

/// All (m, n) with m != 0, 1 <= n <= n_max and m^2 - mn + kn = d, each with a
/// witness pair. Negative divisor pairs are included. When k^2 = d the
/// divisor product vanishes and the two p = 0 / q = 0 families are emitted
/// directly up to n_max.
inline std::vector<DetSolution> solve_det_equation(const Int& d, const Int& k, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  std::map<std::pair<Int, int>, DetWitness> found;
  auto offer = [&](const Int& p, const Int& q) {
    Int m = k + p;
    Int n = 2 * k + p + q;
    if (m == 0 || n < 1 || n > n_max) return;
    found.emplace(std::make_pair(m, static_cast<int>(n)), DetWitness{p, q});
  };
  Int t = k * k - d;
  if (t == 0) {
    for (int n = 1; n <= n_max; ++n) {
      offer(Int(0), Int(n) - 2 * k);       // p = 0 family: m = k
      offer(Int(n) - 2 * k, Int(0));       // q = 0 family: m = n - k
    }
  } else {
    for (const Int& e : detail::divisors(t)) {
      Int f = t / e;
      offer(e, f);
      offer(-e, -f);
      offer(f, e);
      offer(-f, -e);
    }
  }
  std::vector<DetSolution> out;
  out.reserve(found.size());
  for (auto& [key, w] : found) out.push_back({key.first, key.second, w});
  std::sort(out.begin(), out.end(), [](const DetSolution& a, const DetSolution& b) {
    return a.n != b.n ? a.n < b.n : a.m < b.m;
  });
  return out;
}

/// Upper bound n/4 + d/n on k over all lattices of rank n and determinant d.
inline Rat k_upper_bound(int n, const Int& d) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  return Rat(n, 4) + Rat(d, n);
}

enum class RootFamily { A, D, E, AplusA1, None };

/// Classification label after parameter normalization. `rank` is the
/// subscript of the family symbol (the A-part rank for A + A_1). `note`
/// records small-rank coincidences of the requested parameters.
struct RootLatticeLabel {
  RootFamily family = RootFamily::None;
  int rank = 0;
  std::string note;

  bool operator==(const RootLatticeLabel& o) const {
    return family == o.family && rank == o.rank;
  }

  std::string name() const {
    switch (family) {
      case RootFamily::A:
        return "A_" + std::to_string(rank);
      case RootFamily::D:
        return "D_" + std::to_string(rank);
      case RootFamily::E:
        return "E_" + std::to_string(rank);
      case RootFamily::AplusA1:
        return "A_" + std::to_string(rank) + "+A_1";
      case RootFamily::None:
        return "none";
    }
    return "none";
  }
};

/// Root-lattice classification: after normalization, A_n for (2,1), D_n for
/// (2,2) with n >= 4, E_n for (2,3) with 6 <= n <= 8, A_{n-1} + A_1 for
/// k = 2, m = n, and nothing otherwise.
inline RootLatticeLabel classify_root_lattice(const LatticeParams& p) {
  LatticeParams q = normalize_params(p);
  RootLatticeLabel label;
  if (q.k != 2) return label;
  const int n = q.n;
  if (q.m == q.n) {
    if (n == 1) {
      label = {RootFamily::A, 1, ""};
    } else {
      label = {RootFamily::AplusA1, n - 1, ""};
    }
  } else if (q.m == 1) {
    label = {RootFamily::A, n, ""};
  } else if (q.m == 2) {
    label = {RootFamily::D, n, ""};  // normalization forces n >= 4 here
  } else if (q.m == 3 && n >= 6 && n <= 8) {
    label = {RootFamily::E, n, ""};
  } else {
    return label;
  }
  // Record the classical aliases when the request named a small E_n or D_n.
  LatticeParams r = p;
  if (r.m < 0) r = LatticeParams(r.k - 2 * r.m, -r.m, r.n);
  while (r.m > r.n) r = LatticeParams(r.k + 2 * (r.m - Int(r.n)), r.m - Int(r.n), r.n);
  if (r.k == 2 && r.m == 3) {
    if (r.n == 3) label.note = "E_3 = A_2+A_1";
    if (r.n == 4) label.note = "E_4 = A_4";
    if (r.n == 5) label.note = "E_5 = D_5";
  }
  if (r.k == 2 && r.m == 2) {
    if (r.n == 2) label.note = "D_2 = A_1+A_1";
    if (r.n == 3) label.note = "D_3 = A_3";
  }
  return label;
}

/// Nonnegative witness (p, q) with pq = k^2 - 1, m = k + p, n = 2k + p + q,
/// present exactly when L_{k,m,n} is positive-definite and unimodular.
/// Requires 1 <= m <= n - 1.
inline std::optional<DetWitness> unimodular_witness(const LatticeParams& p) {
  if (p.m < 1 || p.m > p.n - 1) {
    throw std::invalid_argument("unimodular_witness requires 1 <= m <= n-1");
  }
  if (det_lattice(p) != 1) return std::nullopt;
  DetWitness w{p.m - p.k, Int(p.n) - p.m - p.k};
  // det = 1 with 1 <= m <= n-1 forces both components nonnegative.
  if (w.p < 0 || w.q < 0 || w.p * w.q != p.k * p.k - 1) {
    throw InternalInconsistencyError("unimodular witness failed its defining identities");
  }
  return w;
}

/// All (k, m) with 1 <= m <= n-1 making L_{k,m,n} positive-definite and
/// unimodular, enumerated through the witness equation; optionally only the
/// even lattices (even iff k even). Sorted by (k, m).
inline std::vector<LatticeParams> enumerate_unimodular(int n, bool even_only) {
  if (n < 2) throw std::invalid_argument("enumerate_unimodular requires n >= 2");
  std::vector<LatticeParams> out;
  Rat bound = k_upper_bound(n, 1);
  Int k_max = numerator(bound) / denominator(bound);  // floor, bound > 0
  for (Int k = 1; k <= k_max; ++k) {
    if (even_only && k % 2 != 0) continue;
    std::vector<std::pair<Int, Int>> pairs;
    Int t = k * k - 1;
    if (t == 0) {
      // k = 1: p = 0 (m = 1) and q = 0 (m = n - 1)
      pairs.emplace_back(0, Int(n) - 2);
      pairs.emplace_back(Int(n) - 2, 0);
    } else {
      for (const Int& e : detail::divisors(t)) {
        pairs.emplace_back(e, t / e);
        pairs.emplace_back(t / e, e);
      }
    }
    for (const auto& [p, q] : pairs) {
      if (p < 0 || q < 0) continue;
      if (2 * k + p + q != n) continue;
      Int m = k + p;
      if (m < 1 || m > n - 1) continue;
      LatticeParams cand(k, m, n);
      if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end(), [](const LatticeParams& a, const LatticeParams& b) {
    return a.k != b.k ? a.k < b.k : a.m < b.m;
  });
  return out;
}

}  // namespace checkerboard
