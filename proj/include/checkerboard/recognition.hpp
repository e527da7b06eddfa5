#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "checkerboard/errors.hpp"
#include "checkerboard/lattice.hpp"
#include "checkerboard/matrix.hpp"
#include "checkerboard/normal_form.hpp"
#include "checkerboard/numeric.hpp"

namespace checkerboard {

/// An integral lattice given abstractly by the Gram matrix of a basis
/// b_1, ..., b_n.
struct AbstractLattice {
  IntMatrix gram;

  explicit AbstractLattice(IntMatrix g) : gram(std::move(g)) {
    if (!gram.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  }

  int rank() const { return static_cast<int>(gram.rows()); }
};

/// A rank n-1 sublattice given by the b-coordinates of vectors
/// alpha_1, ..., alpha_{n-1}, required to be a primitively embedded copy of
/// the root lattice A_{n-1} (path Cartan Gram, unit invariant factors).
struct SublatticeEmbedding {
  IntMatrix rows;  // (n-1) x n
};

/// Cartan matrix of A_n: 2 on the diagonal, -1 on the path edges.
inline IntMatrix cartan_a(int n) {
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  }
  return c;
}

/// Gram matrix of L_{k,m,n} in the basis (alpha_1, ..., alpha_{n-1}, beta):
/// the A_{n-1} Cartan block, (beta|alpha_i) = delta_{i,m}, (beta|beta) = k.
inline IntMatrix recognized_gram(const Int& k, int m, int n) {
  IntMatrix g = cartan_a(n - 1);
  IntMatrix out(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) out(i, j) = g(i, j);
  }
  out(n - 1, n - 1) = k;
  if (m >= 1 && m <= n - 1) {
    out(n - 1, m - 1) = 1;
    out(m - 1, n - 1) = 1;
  }
  return out;
}

/// Recognition witness: L is isomorphic to L_{k,m,n} via the basis encoded in
/// the rows of `transform` (the alpha rows followed by beta).
struct RecognitionResult {
  Int k;
  int m = 0;
  IntMatrix transform;  // n x n, unimodular
};

namespace detail {

inline void check_embedding(const AbstractLattice& lattice, const SublatticeEmbedding& sub) {
  const int n = lattice.rank();
  if (static_cast<int>(sub.rows.rows()) != n - 1 ||
      static_cast<int>(sub.rows.cols()) != n) {
    throw std::invalid_argument("sublattice embedding must be (n-1) x n");
  }
  if (n == 1) return;
  if (sub.rows * lattice.gram * sub.rows.transposed() != cartan_a(n - 1)) {
    throw NotCartanAError();
  }
  for (const Int& f : invariant_factors(sub.rows)) {
    if (f != 1) throw NotPrimitiveError();
  }
}

}  // namespace detail

/// Primitive generator of M-perp = {x in L : (x|alpha_i) = 0 for all i},
/// which has rank 1 whenever the embedding invariants hold. Sign convention:
/// first nonzero coordinate positive.
inline std::vector<Int> annihilator(const AbstractLattice& lattice,
                                    const SublatticeEmbedding& sub) {
  detail::check_embedding(lattice, sub);
  const int n = lattice.rank();
  std::vector<std::vector<Int>> kernel;
  if (n == 1) {
    kernel = {{Int(1)}};
  } else {
    kernel = integer_kernel(sub.rows * lattice.gram);
  }
  if (kernel.size() != 1) throw KernelRankNotOneError(kernel.size());
  std::vector<Int> nu = kernel.front();
  for (const Int& c : nu) {
    if (c != 0) {
      if (c < 0) {
        for (Int& v : nu) v = -v;
      }
      break;
    }
  }
  return nu;
}

/// |L / (M + M-perp)|: the absolute determinant of the alpha rows stacked
/// with nu. Always divides n (= |M*/M| for A_{n-1}).
inline Int quotient_order(const AbstractLattice& lattice, const SublatticeEmbedding& sub,
                          const std::vector<Int>& nu) {
  IntMatrix stack = vstack(sub.rows, from_rows<Int>({nu}));
  Int d = abs(det_bareiss(stack));
  if (d < 1) throw InternalInconsistencyError("alpha rows and nu do not span a finite-index sublattice");
  if (Int(lattice.rank()) % d != 0) {
    throw InternalInconsistencyError("quotient order " + d.str() + " does not divide n");
  }
  return d;
}

namespace detail {

/// Inverse Cartan of A_{n-1}: entries min(i,j) - ij/n, 1-based.
inline RatMatrix inverse_cartan_a(int n) {
  RatMatrix inv(n - 1, n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      inv(i - 1, j - 1) = Rat(std::min(i, j)) - Rat(Int(i) * j, n);
    }
  }
  return inv;
}

struct RecognitionContext {
  const AbstractLattice& lattice;
  const SublatticeEmbedding& sub;
  std::vector<Int> nu;
  Int d;
  std::vector<Int> lambda;  // representative of a generator of L/(M + M-perp)
};

/// Carries out the constructive proof. The label m depends on the chosen
/// sign of nu (the other sign gives n - m); everything else is forced.
inline RecognitionResult recognize_with(const RecognitionContext& ctx) {
  const IntMatrix& gram = ctx.lattice.gram;
  const int n = ctx.lattice.rank();
  const Int& d = ctx.d;
  const std::vector<Int>& nu = ctx.nu;

  // Pairings (lambda | alpha_i) and the M-projection coefficients.
  std::vector<Int> g_lambda = gram * ctx.lambda;
  std::vector<Int> pair(n - 1);
  for (int i = 0; i < n - 1; ++i) pair[i] = dot(ctx.sub.rows.row(i), g_lambda);
  RatMatrix ainv = inverse_cartan_a(n);
  std::vector<Rat> w(n - 1, Rat(0));  // lambda_M in alpha coordinates
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n - 1; ++j) w[i] += ainv(i, j) * Rat(pair[j]);
  }
  // lambda_perp = lambda - lambda_M must be (c/d) nu with gcd(c, d) = 1.
  std::vector<Rat> lambda_perp(n);
  for (int j = 0; j < n; ++j) {
    lambda_perp[j] = Rat(ctx.lambda[j]);
    for (int i = 0; i < n - 1; ++i) lambda_perp[j] -= w[i] * Rat(ctx.sub.rows(i, j));
  }
  std::size_t lead = 0;
  while (lead < nu.size() && nu[lead] == 0) ++lead;
  Rat ratio = lambda_perp[lead] / Rat(nu[lead]);
  for (int j = 0; j < n; ++j) {
    if (lambda_perp[j] != ratio * Rat(nu[j])) {
      throw InternalInconsistencyError("lambda projection is not proportional to nu");
    }
  }
  if (denominator(ratio) != d) {
    throw InternalInconsistencyError("projection denominator " + denominator(ratio).str() +
                                     " differs from quotient order " + d.str());
  }
  Int c = numerator(ratio);

  // a c + b d = 1; then beta = a lambda + mu + b nu with mu in M chosen so
  // that a lambda_M + mu is the fundamental weight of index m.
  ExtGcd e = ext_gcd(c, d);
  if (e.g != 1) throw InternalInconsistencyError("projection numerator not coprime to order");
  Int a = e.x, b = e.y;

  // Class of a lambda_M in M*/M = Z/n under the map sending weight i to i.
  Int sigma = 0;
  for (int i = 1; i <= n - 1; ++i) sigma += Int(i) * a * pair[i - 1];
  sigma %= n;
  if (sigma < 0) sigma += n;
  if (sigma == 0 || Int(n) / gcd(sigma, Int(n)) != d) {
    throw InternalInconsistencyError("class of a*lambda_M does not have exact order d");
  }
  const int m = static_cast<int>(sigma);

  // mu = weight_m - a lambda_M, integral in the alpha basis.
  std::vector<Int> beta(ctx.lambda);
  for (Int& v : beta) v *= a;
  for (int i = 0; i < n - 1; ++i) {
    Rat coeff = ainv(m - 1, i) - Rat(a) * w[i];
    Int ci = to_int(coeff);  // throws if the proof-step integrality fails
    for (int j = 0; j < n; ++j) beta[j] += ci * ctx.sub.rows(i, j);
  }
  for (int j = 0; j < n; ++j) beta[j] += b * nu[j];

  std::vector<Int> g_beta = gram * beta;
  Int k = dot(beta, g_beta);
  IntMatrix u = vstack(ctx.sub.rows, from_rows<Int>({beta}));
  if (abs(det_bareiss(u)) != 1) {
    throw InternalInconsistencyError("recognized basis is not unimodular");
  }
  if (u * gram * u.transposed() != recognized_gram(k, m, n)) {
    throw InternalInconsistencyError("recognized basis has the wrong Gram matrix");
  }
  return {std::move(k), m, std::move(u)};
}

/// Sign anchor used inside recognition: last nonzero coordinate positive.
/// With this choice the proof run on the Gram of L_{k,m,n} in its own
/// (alpha, beta) basis returns beta = b_n and the identity transform, and
/// reversing the order of the alpha rows flips the label m to n - m.
inline void anchor_sign(std::vector<Int>& nu) {
  for (auto it = nu.rbegin(); it != nu.rend(); ++it) {
    if (*it != 0) {
      if (*it < 0) {
        for (Int& v : nu) v = -v;
      }
      return;
    }
  }
}

}  // namespace detail

/// Constructive recognition: produces (k, m) with 1 <= m <= n and a
/// unimodular transform exhibiting L = L_{k,m,n}, given a primitive A_{n-1}
/// sublattice.
inline RecognitionResult recognize(const AbstractLattice& lattice,
                                   const SublatticeEmbedding& sub) {
  const int n = lattice.rank();
  std::vector<Int> nu = annihilator(lattice, sub);
  detail::anchor_sign(nu);
  Int d = quotient_order(lattice, sub, nu);
  if (d == 1) {
    // L = M + M-perp: k = |nu|^2 and m = n.
    std::vector<Int> g_nu = lattice.gram * nu;
    Int k = dot(nu, g_nu);
    IntMatrix u = vstack(sub.rows, from_rows<Int>({nu}));
    if (abs(det_bareiss(u)) != 1) {
      throw InternalInconsistencyError("direct-sum basis is not unimodular");
    }
    if (u * lattice.gram * u.transposed() != recognized_gram(k, n, n)) {
      throw InternalInconsistencyError("direct-sum basis has the wrong Gram matrix");
    }
    return {std::move(k), n, std::move(u)};
  }

  // Canonical generator of the cyclic quotient from the Smith transform of
  // the generator matrix of M + M-perp.
  IntMatrix gens(n, n);  // columns: alpha_1, ..., alpha_{n-1}, nu
  for (int j = 0; j < n - 1; ++j) {
    for (int i = 0; i < n; ++i) gens(i, j) = sub.rows(j, i);
  }
  for (int i = 0; i < n; ++i) gens(i, n - 1) = nu[i];
  SmithDecomposition smith = smith_normal_form(gens);
  for (int i = 0; i < n - 1; ++i) {
    if (smith.D(i, i) != 1) {
      throw InternalInconsistencyError("quotient by M + M-perp is not cyclic");
    }
  }
  if (smith.D(n - 1, n - 1) != d) {
    throw InternalInconsistencyError("Smith form order disagrees with quotient order");
  }
  std::vector<Int> target(n, Int(0));
  target[n - 1] = 1;
  auto sol = solve_rational(smith.U, target);
  if (!sol) throw InternalInconsistencyError("Smith transform is not invertible");
  std::vector<Int> lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = to_int((*sol)[i]);

  detail::RecognitionContext ctx{lattice, sub, std::move(nu), std::move(d), std::move(lambda)};
  return detail::recognize_with(ctx);
}

/// Independent check of a recognition witness: U integral with det +-1, its
/// first n-1 rows the alpha rows, and U G U^T the Gram of L_{k,m,n} in the
/// (alpha, beta) basis.
inline bool certify(const AbstractLattice& lattice, const SublatticeEmbedding& sub,
                    const RecognitionResult& r) {
  const int n = lattice.rank();
  if (r.m < 1 || r.m > n) return false;
  if (static_cast<int>(r.transform.rows()) != n ||
      static_cast<int>(r.transform.cols()) != n) {
    return false;
  }
  for (int i = 0; i < n - 1; ++i) {
    if (r.transform.row(i) != sub.rows.row(i)) return false;
  }
  if (abs(det_bareiss(r.transform)) != 1) return false;
  return r.transform * lattice.gram * r.transform.transposed() ==
         recognized_gram(r.k, r.m, n);
}

}  // namespace checkerboard
