#include <doctest.h>

#include "ginv/errors.hpp"
#include "ginv/geninv.hpp"
#include "ginv/graphs.hpp"
#include "ginv/random_specs.hpp"

using namespace ginv;

namespace {

DoubleStarSpec ones(std::size_t m, std::size_t n) {
  DoubleStarSpec s;
  s.a = 1;
  s.b = 1;
  s.x.assign(m, 1);
  s.y.assign(m, 1);
  s.z.assign(n, 1);
  s.w.assign(n, 1);
  return s;
}

Star unit_star() { return Star{{1}, {1}}; }

}  // namespace

TEST_CASE("double star matrix") {
  CHECK(build_double_star(ones(1, 1)) ==
        ExactMatrix{{0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {0, 0, 1, 0}});

  DoubleStarSpec bad = ones(2, 1);
  bad.x[1] = 0;
  CHECK_THROWS_AS(build_double_star(bad), SpecViolation);
  try {
    bad.validate();
  } catch (const SpecViolation& e) {
    CHECK(e.field() == "x");
  }
  DoubleStarSpec uneven = ones(2, 2);
  uneven.y.pop_back();
  CHECK_THROWS_AS(uneven.validate(), SpecViolation);
  DoubleStarSpec za = ones(1, 1);
  za.a = 0;
  CHECK_THROWS_AS(za.validate(), SpecViolation);
}

TEST_CASE("double star digraph structure") {
  Rng rng(2);
  RandomBounds b;
  for (int trial = 0; trial < 30; ++trial) {
    DoubleStarSpec s = random_double_star(rng, b, DoubleStarTag::GroupInvertible);
    Digraph g = digraph_of(build_double_star(s));
    std::size_t m = s.m(), n = s.n();
    CHECK(g.vertex_count == m + n + 2);
    CHECK(g.edges.size() == 2 * (m + n) + 2);
    CHECK(g.has_edge(0, m + 1));
    CHECK(g.has_edge(m + 1, 0));
    for (std::size_t i = 1; i <= m; ++i) {
      CHECK(g.has_edge(0, i));
      CHECK(g.has_edge(i, 0));
      CHECK(g.out_degree(i) == 1);
    }
    for (std::size_t j = m + 2; j < m + n + 2; ++j) {
      CHECK(g.has_edge(m + 1, j));
      CHECK(g.in_degree(j) == 1);
    }
    CHECK(g.out_degree(0) == m + 1);
  }
}

TEST_CASE("digraph of simple matrices") {
  CHECK(digraph_of(ExactMatrix::zero(3, 3)).edges.empty());
  Digraph loops = digraph_of(ExactMatrix::identity(2));
  CHECK(loops.edges.size() == 2);
  CHECK(loops.has_edge(0, 0));
  CHECK(loops.has_edge(1, 1));
  CHECK_THROWS_AS(digraph_of(ExactMatrix{{1, 2}}), DimensionMismatch);
}

TEST_CASE("d-linked matrix") {
  DLinkedSpec one{ExactMatrix{{0}}, {unit_star()}};
  CHECK(build_d_linked(one).m == ExactMatrix{{0, 1}, {1, 0}});

  DLinkedSpec two{ExactMatrix{{0, 1}, {1, 0}}, {unit_star(), unit_star()}};
  CHECK(build_d_linked(two).m ==
        ExactMatrix{{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});

  DLinkedSpec bad{ExactMatrix{{0, 1}, {1, 0}}, {unit_star()}};
  CHECK_THROWS_AS(bad.validate(), SpecViolation);
  DLinkedSpec zero_leaf{ExactMatrix{{0}}, {Star{{1, 0}, {1, 1}}}};
  CHECK_THROWS_AS(zero_leaf.validate(), SpecViolation);

  Rng rng(4);
  DLinkedBounds b;
  for (int trial = 0; trial < 30; ++trial) {
    DLinkedSpec s = random_d_linked(rng, b, StarPairing::Mixed);
    auto mats = build_d_linked(s);
    std::vector<Scalar> d;
    for (const auto& st : s.stars) d.push_back(dot(st.x, st.y));
    CHECK(mats.b * mats.c == ExactMatrix::diagonal(d, s.cfg()));
    CHECK(mats.m.rows() == s.stars.size() + s.leaf_count());
  }
}

TEST_CASE("swap stars") {
  DoubleStarSpec s = ones(1, 1);
  s.a = 2;
  s.b = 3;
  auto sw = swap_stars(s);
  CHECK(sw.spec.a == Scalar(3));
  CHECK(sw.spec.b == Scalar(2));
  ExactMatrix m = build_double_star(s);
  CHECK(build_double_star(sw.spec) == sw.p * m * sw.p.transpose());
  CHECK(swap_stars(sw.spec).spec == s);

  Rng rng(9);
  RandomBounds b;
  for (auto tag : {DoubleStarTag::GroupInvertible, DoubleStarTag::BothZero,
                   DoubleStarTag::Mirrored, DoubleStarTag::NilpotentCase}) {
    for (int trial = 0; trial < 6; ++trial) {
      DoubleStarSpec r = random_double_star(rng, b, tag);
      auto rs = swap_stars(r);
      ExactMatrix mr = build_double_star(r);
      CHECK(build_double_star(rs.spec) == rs.p * mr * rs.p.transpose());
      CHECK(swap_stars(rs.spec).spec == r);
      CHECK(drazin_inverse(mr).index == drazin_inverse(build_double_star(rs.spec)).index);
    }
  }
}

TEST_CASE("dot and gram") {
  std::vector<Scalar> x{1, Scalar::i()};
  CHECK(dot(x, x).is_zero());
  CHECK(gram(x, FieldConfig::gaussian(Involution::Identity)).is_zero());
  CHECK(gram(x, FieldConfig::gaussian(Involution::Conjugation)) == Scalar(2));
}
