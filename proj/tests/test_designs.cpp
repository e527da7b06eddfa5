#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "checkerboard/checkerboard.hpp"

using namespace checkerboard;

TEST_CASE("design verification", "[designs]") {
  CHECK(verify_design(fano()) == DesignParams{7, 3, 1});

  SymmetricDesign triangle{3, {{1, 2}, {2, 3}, {1, 3}}};
  CHECK(verify_design(triangle) == DesignParams{3, 2, 1});

  SymmetricDesign short_count{4, {{1, 2}, {3, 4}, {1, 3}}};
  CHECK_THROWS_AS(verify_design(short_count), DesignError);
  try {
    verify_design(short_count);
  } catch (const DesignError& e) {
    CHECK(e.fault() == DesignFault::BlockCountMismatch);
  }

  SymmetricDesign ragged{3, {{1, 2}, {2}, {1, 3}}};
  CHECK_THROWS_AS(verify_design(ragged), DesignError);
  try {
    verify_design(ragged);
  } catch (const DesignError& e) {
    CHECK(e.fault() == DesignFault::BlockSizeMismatch);
  }

  SymmetricDesign uneven{4, {{1, 2}, {1, 2}, {3, 4}, {1, 3}}};
  CHECK_THROWS_AS(verify_design(uneven), DesignError);
  try {
    verify_design(uneven);
  } catch (const DesignError& e) {
    CHECK(e.fault() == DesignFault::IntersectionNotConstant);
  }

  SymmetricDesign bad_point{2, {{1, 2}, {2, 3}}};
  CHECK_THROWS_AS(verify_design(bad_point), DesignError);
}

TEST_CASE("hadamard constructions", "[designs]") {
  IntMatrix h1 = sylvester_hadamard(1);
  CHECK(h1 == IntMatrix{{1, 1}, {1, -1}});
  for (int t = 1; t <= 6; ++t) {
    IntMatrix h = sylvester_hadamard(t);
    std::size_t order = h.rows();
    CHECK(order == (std::size_t{1} << t));
    IntMatrix target(order, order);
    for (std::size_t i = 0; i < order; ++i) target(i, i) = Int(order);
    REQUIRE(h * h.transposed() == target);
  }
  for (int q : {3, 7, 11, 19, 23}) {
    IntMatrix h = paley_hadamard(q);
    std::size_t order = h.rows();
    REQUIRE(order == static_cast<std::size_t>(q + 1));
    IntMatrix target(order, order);
    for (std::size_t i = 0; i < order; ++i) target(i, i) = Int(order);
    REQUIRE(h * h.transposed() == target);
  }
  CHECK_THROWS_AS(paley_hadamard(5), std::invalid_argument);   // 5 = 1 mod 4
  CHECK_THROWS_AS(paley_hadamard(9), std::invalid_argument);   // not prime
}

TEST_CASE("designs out of hadamard matrices", "[designs]") {
  CHECK(verify_design(design_from_hadamard(sylvester_hadamard(3))) == DesignParams{7, 3, 1});
  CHECK(verify_design(design_from_hadamard(sylvester_hadamard(4))) == DesignParams{15, 7, 3});
  CHECK(verify_design(design_from_hadamard(sylvester_hadamard(2))) == DesignParams{3, 1, 0});
  for (int t = 3; t <= 6; ++t) {
    int pts = (1 << t) - 1;
    CHECK(verify_design(design_from_hadamard(sylvester_hadamard(t))) ==
          DesignParams{pts, (1 << (t - 1)) - 1, (1 << (t - 2)) - 1});
  }
  CHECK(verify_design(design_from_hadamard(paley_hadamard(11))) == DesignParams{11, 5, 2});

  IntMatrix not_h{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  not_h(3, 3) = -1;
  CHECK_THROWS_AS(design_from_hadamard(not_h), NotHadamardError);
  CHECK_THROWS_AS(design_from_hadamard(sylvester_hadamard(1)), NotHadamardError);  // order 2
}

TEST_CASE("design complements", "[designs]") {
  SymmetricDesign comp = complement_design(fano());
  CHECK(verify_design(comp) == DesignParams{7, 4, 2});
  SymmetricDesign toy{3, {{1, 2}, {2, 3}, {1, 3}}};
  CHECK(verify_design(complement_design(toy)) == DesignParams{3, 1, 0});
  // involution
  SymmetricDesign twice = complement_design(complement_design(fano()));
  CHECK(twice.blocks == fano().blocks);
}

TEST_CASE("frames from designs", "[designs]") {
  Frame f = frame_from_design(fano());
  CHECK(f.params == LatticeParams(2, 3, 7));
  CHECK(f.norm == 2);
  CHECK(verify_frame(f).ok);

  Frame f15 = frame_from_design(design_from_hadamard(sylvester_hadamard(4)));
  CHECK(f15.params == LatticeParams(4, 7, 15));
  CHECK(f15.norm == 4);
  CHECK(verify_frame(f15).ok);

  // 2-(4k-1, 2k-1, k-1) gives a k-frame of L(k, 2k-1, 4k-1)
  for (int q : {7, 11, 19}) {
    Frame fq = frame_from_design(design_from_hadamard(paley_hadamard(q)));
    int k = (q + 1) / 4;
    CHECK(fq.params == LatticeParams(k, 2 * k - 1, 4 * k - 1));
    CHECK(verify_frame(fq).ok);
  }

  // degenerate 2-(3,1,0): k = 1 frame of L(1,1,3) = Z^3
  Frame unit = frame_from_design(design_from_hadamard(sylvester_hadamard(2)));
  CHECK(unit.params == LatticeParams(1, 1, 3));
  CHECK(verify_frame(unit).ok);
}

TEST_CASE("the m-set pairing identity", "[designs]") {
  // (e_I|e_J) = |I cap J| + k - m for m-sets I, J
  std::mt19937 rng(1031);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    int m = 1 + static_cast<int>(rng() % (n - 1));
    Int k = static_cast<int>(rng() % 9) - 2;
    if (k == 0) k = m;  // any nonzero value is fine for the identity
    LatticeParams p(k, m, n);
    std::vector<int> points(n);
    for (int i = 0; i < n; ++i) points[i] = i + 1;
    auto pick = [&]() {
      std::vector<int> pool = points;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(m);
      return pool;
    };
    std::vector<int> i_set = pick(), j_set = pick();
    std::set<int> si(i_set.begin(), i_set.end()), sj(j_set.begin(), j_set.end());
    int meet = 0;
    for (int x : si) meet += sj.count(x);
    LatticeVector ei = LatticeVector::indicator(n, i_set);
    LatticeVector ej = LatticeVector::indicator(n, j_set);
    REQUIRE(inner(p, ei, ej) == Rat(Int(meet) + k - m));
  }
}

TEST_CASE("non-designs give non-frames", "[designs]") {
  // Converse direction: when n same-size blocks are NOT a symmetric design,
  // the e_I Gram is not k I_n for any k. Non-constant intersections show up
  // directly as non-constant off-diagonal form values.
  std::mt19937 rng(2047);
  int non_designs = 0, designs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 5 + static_cast<int>(rng() % 5);
    int m = 2 + static_cast<int>(rng() % (n - 3));
    SymmetricDesign d{n, {}};
    std::vector<int> points(n);
    for (int i = 0; i < n; ++i) points[i] = i + 1;
    for (int b = 0; b < n; ++b) {
      std::vector<int> pool = points;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(m);
      std::sort(pool.begin(), pool.end());
      d.blocks.push_back(pool);
    }
    bool is_design = true;
    try {
      verify_design(d);
    } catch (const DesignError&) {
      is_design = false;
    }
    // Evaluate the e_I Gram for every norm candidate k in 1..m.
    std::vector<LatticeVector> vecs;
    bool scalar_for_some_k = false;
    for (Int k = 1; k <= m; ++k) {
      LatticeParams p(k, m, n);
      vecs.clear();
      for (const auto& block : d.blocks) vecs.push_back(LatticeVector::indicator(n, block));
      bool scalar = true;
      for (int i = 0; i < n && scalar; ++i) {
        for (int j = i; j < n && scalar; ++j) {
          Rat want = i == j ? Rat(k) : Rat(0);
          if (inner(p, vecs[i], vecs[j]) != want) scalar = false;
        }
      }
      if (scalar) scalar_for_some_k = true;
    }
    if (is_design) {
      ++designs;
    } else {
      ++non_designs;
      REQUIRE_FALSE(scalar_for_some_k);
    }
  }
  CHECK(non_designs > 0);  // random multisets are essentially never designs
}

TEST_CASE("dplus frames", "[designs]") {
  for (int k = 1; k <= 4; ++k) {
    Frame f = dplus_frame(k);
    CHECK(f.params == LatticeParams(k, 2 * k - 1, 4 * k));
    CHECK(f.norm == 2);
    CHECK(f.vectors.size() == static_cast<std::size_t>(4 * k));
    CHECK(verify_frame(f).ok);
  }
}

TEST_CASE("dn frames", "[designs]") {
  for (int n = 2; n <= 12; n += 2) {
    Frame f = dn_frame(n);
    CHECK(f.params == LatticeParams(2, 2, n));
    CHECK(verify_frame(f).ok);
  }
  CHECK(dn_frame(2).vectors[0] == LatticeVector({1, 1}));
  CHECK(dn_frame(2).vectors[1] == LatticeVector({1, -1}));
  CHECK_THROWS_AS(dn_frame(5), std::invalid_argument);
}

TEST_CASE("the E8 frame extends the Fano frame by the highest root", "[designs]") {
  Frame f = e8_frame();
  CHECK(f.params == LatticeParams(2, 3, 8));
  REQUIRE(f.vectors.size() == 8);
  CHECK(verify_frame(f).ok);
  for (int i = 0; i < 7; ++i) {
    CHECK(f.vectors[i][7] == 0);  // Fano vectors live in the first 7 coordinates
    CHECK(f.vectors[i].latitude() == 3);
  }
  // the eighth vector is the recorded root z_8 = (1,1,1,1,1,1,1,2)
  CHECK(f.vectors[7] == LatticeVector({1, 1, 1, 1, 1, 1, 1, 2}));
  CHECK(inner(f.params, f.vectors[7], f.vectors[7]) == 2);
}

TEST_CASE("frame verification reports the first failure", "[designs]") {
  Frame f = frame_from_design(fano());
  Frame missing = f;
  missing.vectors.pop_back();
  FrameCheck count = verify_frame(missing);
  CHECK_FALSE(count.ok);
  CHECK(count.detail.find("expected 7 vectors") != std::string::npos);

  Frame wrong = f;
  std::vector<Int> c = wrong.vectors[3].coords();
  c[0] += 1;
  wrong.vectors[3] = LatticeVector(std::move(c));
  CHECK_FALSE(verify_frame(wrong).ok);
}

TEST_CASE("theta carries a frame to the complement frame", "[designs]") {
  // -theta(e_I) = e_{complement I}: the image frame belongs to the
  // complement design in the opposite lattice.
  Frame f = frame_from_design(fano());
  Frame g = frame_from_design(complement_design(fano()));
  REQUIRE(g.params == opposite_params(f.params));
  for (std::size_t i = 0; i < f.vectors.size(); ++i) {
    LatticeVector image = -theta_lattice(f.params, f.vectors[i]);
    REQUIRE(image == g.vectors[i]);
  }
  CHECK(verify_frame(g).ok);
}
