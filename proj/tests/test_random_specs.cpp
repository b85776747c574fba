#include <doctest.h>

#include "ginv/closedform.hpp"
#include "ginv/errors.hpp"
#include "ginv/geninv.hpp"
#include "ginv/graphs.hpp"
#include "ginv/random_specs.hpp"

using namespace ginv;

TEST_CASE("targeted double star specs") {
  Rng rng(1);
  RandomBounds b;
  DoubleStarSpec bz = random_double_star(rng, b, DoubleStarTag::BothZero);
  CHECK(dot(bz.x, bz.y).is_zero());
  CHECK(dot(bz.z, bz.w).is_zero());
  CHECK_NOTHROW(bz.validate());

  for (int trial = 0; trial < 30; ++trial) {
    DoubleStarSpec n = random_double_star(rng, b, DoubleStarTag::NilpotentCase);
    CHECK(dot(n.x, n.y) == -(n.a * n.b));
    CHECK(classify_double_star(n).tag == DoubleStarTag::NilpotentCase);
  }
}

TEST_CASE("every tag is hit under every field") {
  for (FieldConfig cfg : {FieldConfig::rationals(),
                          FieldConfig::gaussian(Involution::Identity),
                          FieldConfig::gaussian(Involution::Conjugation)}) {
    Rng rng(77);
    RandomBounds b;
    b.cfg = cfg;
    for (auto tag : {DoubleStarTag::GroupInvertible, DoubleStarTag::BothZero,
                     DoubleStarTag::FirstNonzeroSecondZero,
                     DoubleStarTag::NilpotentCase, DoubleStarTag::Mirrored}) {
      for (int trial = 0; trial < 10; ++trial) {
        DoubleStarSpec s = random_double_star(rng, b, tag);
        CHECK(s.cfg == cfg);
        CHECK(s.m() <= b.max_m);
        CHECK(s.n() <= b.max_n);
        CHECK(classify_double_star(s).tag == tag);
      }
    }
  }
}

TEST_CASE("unreachable bounds") {
  Rng rng(1);
  RandomBounds b;
  b.max_m = 1;
  CHECK_THROWS_AS(random_double_star(rng, b, DoubleStarTag::BothZero), UnreachableCase);
}

TEST_CASE("determinism") {
  for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
    Rng r1(seed), r2(seed);
    RandomBounds b;
    b.cfg = FieldConfig::gaussian(Involution::Conjugation);
    CHECK(random_double_star(r1, b, DoubleStarTag::BothZero) ==
          random_double_star(r2, b, DoubleStarTag::BothZero));
    DLinkedBounds db;
    CHECK(random_d_linked(r1, db, StarPairing::Mixed) ==
          random_d_linked(r2, db, StarPairing::Mixed));
    CHECK(random_square(r1, 5, b) == random_square(r2, 5, b));
  }
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("d-linked pairings") {
  Rng rng(3);
  DLinkedBounds b;
  for (int trial = 0; trial < 20; ++trial) {
    DLinkedSpec z = random_d_linked(rng, b, StarPairing::Zero);
    for (const auto& st : z.stars) CHECK(dot(st.x, st.y).is_zero());
    DLinkedSpec nz = random_d_linked(rng, b, StarPairing::Nonzero);
    CHECK(nz.stars.size() <= b.max_centres);
    for (const auto& st : nz.stars) {
      CHECK(!dot(st.x, st.y).is_zero());
      CHECK(st.x.size() <= b.max_leaves);
    }
  }
}

TEST_CASE("jordan sums have the requested index") {
  Rng rng(5);
  for (std::size_t index = 0; index <= 3; ++index) {
    for (int trial = 0; trial < 5; ++trial) {
      auto n = static_cast<std::size_t>(rng.uniform(std::max<long>(3, static_cast<long>(index)), 6));
      ExactMatrix a = random_jordan_sum(rng, n, index);
      CHECK(a.rows() == n);
      CHECK(drazin_inverse(a).index == index);
    }
  }
}

TEST_CASE("uniform draws stay in range") {
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    long v = rng.uniform(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
  ExactMatrix p = random_permutation(rng, 5);
  CHECK(p * p.transpose() == ExactMatrix::identity(5));
}
