#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "checkerboard/checkerboard.hpp"
#include "test_util.hpp"

using namespace checkerboard;

namespace {

std::vector<Rat> rat_vec(std::initializer_list<int> v) {
  std::vector<Rat> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("theta fixes differences and negates block sums", "[duality]") {
  LatticeParams p(2, 3, 8);
  for (int i = 1; i <= 8; ++i) {
    for (int j = 1; j <= 8; ++j) {
      if (i == j) continue;
      LatticeVector diff = LatticeVector::unit(8, i) - LatticeVector::unit(8, j);
      CHECK(theta(p, diff) == to_rat(diff));
    }
  }
  // theta(e_1 + ... + e_m) = -(e_{m+1} + ... + e_n)
  for (int n = 4; n <= 8; ++n) {
    for (int m = 1; m <= n - 1; ++m) {
      LatticeParams q(2, m, n);
      std::vector<int> head, tail;
      for (int i = 1; i <= m; ++i) head.push_back(i);
      for (int i = m + 1; i <= n; ++i) tail.push_back(i);
      CHECK(theta(q, LatticeVector::indicator(n, head)) ==
            to_rat(-LatticeVector::indicator(n, tail)));
    }
  }
  // theta(all-ones) = -((n-m)/m)(all-ones)
  LatticeParams q(5, 3, 7);
  std::vector<Rat> ones(7, Rat(1));
  std::vector<Rat> expect(7, -Rat(4, 3));
  CHECK(theta(q, ones) == expect);
}

TEST_CASE("theta is an isometry onto the opposite lattice", "[duality]") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Int m = 1 + static_cast<int>(rng() % (n - 1));
    Int k = static_cast<int>(rng() % 13) - 6;
    LatticeParams p(k, m, n);
    LatticeParams opp = opposite_params(p);
    REQUIRE(opp == LatticeParams(k, Int(n) - m, n));
    LatticeVector x = testutil::random_lattice_vector(rng, p);
    LatticeVector y = testutil::random_lattice_vector(rng, p);
    LatticeVector tx = theta_lattice(p, x);
    LatticeVector ty = theta_lattice(p, y);
    REQUIRE(contains(opp, tx));
    REQUIRE(contains(opp, ty));
    REQUIRE(inner(opp, tx, ty) == inner(p, x, y));
    // involution on Q^n
    CHECK(theta(opp, theta(p, x)) == to_rat(x));
  }
}

TEST_CASE("theta fixes the base lattice pointwise", "[duality]") {
  std::mt19937 rng(556);
  LatticeParams p(3, 4, 6);
  for (int trial = 0; trial < 50; ++trial) {
    LatticeVector x = testutil::random_lattice_vector(rng, p);
    LatticeVector zero_lat = x - coset_representative(p, x.latitude());
    REQUIRE(zero_lat.latitude() == 0);
    CHECK(theta(p, zero_lat) == to_rat(zero_lat));
  }
}

TEST_CASE("opposite is undefined at m = n", "[duality]") {
  CHECK_THROWS_AS(opposite_params(LatticeParams(2, 4, 4)), OppositeUndefinedError);
  CHECK(opposite_params(LatticeParams(2, 3, 8)) == LatticeParams(2, 5, 8));
  CHECK(opposite_params(LatticeParams(6, 11, 24)) == LatticeParams(6, 13, 24));
}

TEST_CASE("dual gram matches the E-series dual basis values", "[duality]") {
  // (e^i|e^j) = delta_ij + 1/(9-n) for L(2,3,n), n = 6,7,8
  for (int n = 6; n <= 8; ++n) {
    RatMatrix c = dual_gram(LatticeParams(2, 3, n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(c(i, j) == Rat(i == j ? 1 : 0) + Rat(1, 9 - n));
      }
    }
  }
  CHECK(dual_gram(LatticeParams(1, 1, 5)) == to_rational(IntMatrix::identity(5)));
  CHECK_THROWS_AS(dual_gram(LatticeParams(3, 4, 16)), DegenerateFormError);
}

TEST_CASE("dual gram inverts the form matrix", "[duality]") {
  for (Int k = -3; k <= 4; ++k) {
    for (Int m = -3; m <= 3; ++m) {
      if (m == 0) continue;
      for (int n = 1; n <= 6; ++n) {
        LatticeParams p(k, m, n);
        if (det_lattice(p) == 0) continue;
        REQUIRE(dual_gram(p) * form_matrix(p) == to_rational(IntMatrix::identity(n)));
      }
    }
  }
}

TEST_CASE("dual generators pair correctly with lattice vectors", "[duality]") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Int m = 1 + static_cast<int>(rng() % n);
    Int k = static_cast<int>(rng() % 9) - 4;
    LatticeParams p(k, m, n);
    if (det_lattice(p) == 0) continue;
    auto gens = dual_generators(p);
    REQUIRE(gens.size() == static_cast<std::size_t>(n + 1));
    LatticeVector x = testutil::random_lattice_vector(rng, p);
    std::vector<Rat> xr = to_rat(x);
    // (x|e^0) = lat(x)/m and (x|e^i) = x_i
    REQUIRE(inner_rat(p, xr, gens[0]) == Rat(x.latitude(), p.m));
    for (int i = 1; i <= n; ++i) {
      REQUIRE(inner_rat(p, xr, gens[i]) == Rat(x[i - 1]));
    }
  }
}

TEST_CASE("weight pairings from the Coxeter node", "[duality]") {
  // (e^0 | e_1+...+e_m) = 1 and (e^0 | e_{i+1}-e_i) = 0
  LatticeParams p(2, 3, 7);
  auto gens = dual_generators(p);
  LatticeVector node = LatticeVector::indicator(7, {1, 2, 3});
  CHECK(inner_rat(p, to_rat(node), gens[0]) == 1);
  for (int i = 1; i <= 6; ++i) {
    LatticeVector step = LatticeVector::unit(7, i + 1) - LatticeVector::unit(7, i);
    CHECK(inner_rat(p, to_rat(step), gens[0]) == 0);
  }
}

TEST_CASE("integer spans of dual generators pair integrally with the lattice", "[duality]") {
  std::mt19937 rng(809);
  LatticeParams p(3, 2, 5);
  auto gens = dual_generators(p);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rat> combo(5, Rat(0));
    for (const auto& g : gens) {
      int c = static_cast<int>(rng() % 5) - 2;
      for (int i = 0; i < 5; ++i) combo[i] += Rat(c) * g[i];
    }
    LatticeVector x = testutil::random_lattice_vector(rng, p);
    REQUIRE(is_integer(inner_rat(p, combo, to_rat(x))));
  }
}

TEST_CASE("discriminant group order equals the determinant", "[duality]") {
  for (Int k = -2; k <= 4; k += 2) {
    for (Int m = 1; m <= 4; ++m) {
      for (int n = 2; n <= 7; ++n) {
        LatticeParams p(k, m, n);
        Int det = det_lattice(p);
        Int prod = 1;
        for (const Int& f : invariant_factors(gram_matrix(p))) prod *= f;
        REQUIRE(prod == abs(det));
      }
    }
  }
}

TEST_CASE("z vectors", "[duality]") {
  // (2,1,2): z_2 = (-1, 2) with (e_1|z_2) = 0, (e_2|z_2) = 3
  LatticeParams p(2, 1, 2);
  LatticeVector z2 = z_vector(p, 2);
  CHECK(z2 == LatticeVector({-1, 2}));
  CHECK(inner(p, LatticeVector::unit(2, 1), z2) == 0);
  CHECK(inner(p, LatticeVector::unit(2, 2), z2) == 3);

  // (2,3,8): z_8 = e_1 + ... + e_7 + 2 e_8 is a root
  LatticeParams e8(2, 3, 8);
  LatticeVector z8 = z_vector(e8, 8);
  CHECK(z8 == LatticeVector({1, 1, 1, 1, 1, 1, 1, 2}));
  CHECK(inner(e8, z8, z8) == 2);

  // degenerate: z_j still integral, w_j undefined
  LatticeParams deg(3, 4, 16);
  CHECK(z_vector(deg, 5).latitude() == 16);  // m^2
  CHECK_THROWS_AS(dual_weight(deg, 5), DegenerateFormError);
  CHECK_THROWS_AS(z_vector(p, 3), std::invalid_argument);
}

TEST_CASE("z vector pairing identity across a grid", "[duality]") {
  for (Int k = -2; k <= 3; ++k) {
    for (Int m = 1; m <= 5; ++m) {
      int n = 5;
      LatticeParams p(k, m, n);
      Int det = det_lattice(p);
      for (int j = 1; j <= n; ++j) {
        LatticeVector z = z_vector(p, j);
        REQUIRE(contains(p, z));
        for (int i = 1; i <= n; ++i) {
          REQUIRE(inner(p, LatticeVector::unit(n, i), z) == Rat(i == j ? det : 0));
        }
      }
    }
  }
}

TEST_CASE("first dual column solves the form system", "[duality]") {
  // B x = e_1 has the first column of C = B^{-1} as its solution.
  LatticeParams p(2, 1, 3);
  auto x = solve_rational(form_matrix(p), rat_vec({1, 0, 0}));
  REQUIRE(x.has_value());
  RatMatrix c = dual_gram(p);
  for (int i = 0; i < 3; ++i) REQUIRE((*x)[i] == c(i, 0));
}
