#include <doctest.h>

#include "ginv/closedform.hpp"
#include "ginv/errors.hpp"
#include "ginv/geninv.hpp"
#include "ginv/graphs.hpp"
#include "ginv/linalg.hpp"
#include "ginv/random_specs.hpp"

using namespace ginv;

namespace {

const FieldConfig kGaussId = FieldConfig::gaussian(Involution::Identity);
const FieldConfig kGaussConj = FieldConfig::gaussian(Involution::Conjugation);

DoubleStarSpec spec(std::vector<Scalar> x, std::vector<Scalar> y,
                    std::vector<Scalar> z, std::vector<Scalar> w,
                    FieldConfig cfg = {}) {
  DoubleStarSpec s;
  s.a = 1;
  s.b = 1;
  s.x = std::move(x);
  s.y = std::move(y);
  s.z = std::move(z);
  s.w = std::move(w);
  s.cfg = cfg;
  return s;
}

DoubleStarSpec both_zero() { return spec({1, 1}, {1, -1}, {1, 1}, {1, -1}); }
DoubleStarSpec first_nonzero() { return spec({1, 1}, {1, 1}, {1, 1}, {1, -1}); }
DoubleStarSpec nilpotent() { return spec({1, 1}, {1, -2}, {1, 1}, {1, -1}); }
DoubleStarSpec ones() { return spec({1}, {1}, {1}, {1}); }

Star zero_star() { return Star{{1, 1}, {1, -1}}; }

}  // namespace

TEST_CASE("classification") {
  auto bz = classify_double_star(both_zero());
  CHECK(bz.tag == DoubleStarTag::BothZero);
  CHECK(bz.xy.is_zero());
  CHECK(bz.zw.is_zero());
  CHECK(!bz.zeta);

  auto fn = classify_double_star(first_nonzero());
  CHECK(fn.tag == DoubleStarTag::FirstNonzeroSecondZero);
  REQUIRE(fn.zeta);
  CHECK(*fn.zeta == Scalar(3));

  auto nil = classify_double_star(nilpotent());
  CHECK(nil.tag == DoubleStarTag::NilpotentCase);
  CHECK(nil.xy == Scalar(-1));

  CHECK(classify_double_star(ones()).tag == DoubleStarTag::GroupInvertible);
  CHECK(classify_double_star(spec({1, 1}, {1, -1}, {1}, {1})).tag == DoubleStarTag::Mirrored);
  CHECK(to_string(DoubleStarTag::FirstNonzeroSecondZero) == "first_nonzero_second_zero");
}

TEST_CASE("group-invertible double star") {
  auto r = double_star_group(ones());
  REQUIRE(r.exists);
  auto oracle = group_inverse(build_double_star(ones()));
  REQUIRE(oracle.exists);
  CHECK(*r.matrix == *oracle.matrix);
  CHECK(r.method == Method::ClosedForm);
  CHECK_THROWS_AS(double_star_group(both_zero()), WrongCase);

  Rng rng(41);
  RandomBounds b;
  for (int trial = 0; trial < 20; ++trial) {
    DoubleStarSpec s = random_double_star(rng, b, DoubleStarTag::GroupInvertible);
    auto cf = double_star_group(s);
    auto gen = group_inverse(build_double_star(s));
    REQUIRE(cf.exists);
    REQUIRE(gen.exists);
    CHECK(*cf.matrix == *gen.matrix);
    REQUIRE(cf.drazin);
    CHECK(cf.drazin->min_poly == minimal_polynomial(build_double_star(s)));
  }
}

TEST_CASE("drazin closed forms on the worked specs") {
  auto bz = double_star_drazin(both_zero());
  CHECK(bz.index == 2);
  CHECK(bz.min_poly == Polynomial{0, 0, -1, 0, 1});
  CHECK(bz.inverse == drazin_inverse(build_double_star(both_zero())).inverse);

  auto fn = double_star_drazin(first_nonzero());
  CHECK(fn.index == 3);
  CHECK(fn.min_poly == Polynomial{0, 0, 0, -3, 0, 1});
  CHECK(fn.inverse == drazin_inverse(build_double_star(first_nonzero())).inverse);
  CHECK(!fn.inverse.is_zero());

  auto nil = double_star_drazin(nilpotent());
  CHECK(nil.index == 5);
  CHECK(nil.inverse.is_zero());
  CHECK(nil.min_poly == Polynomial::monomial(5));

  ExactMatrix m = build_double_star(nilpotent());
  ExactMatrix m4 = m.pow(4);
  CHECK(m.pow(5).is_zero());
  CHECK(!m4.is_zero());
  // Only the leaf block of the second star survives: ab * w z^T.
  ExactMatrix wzt = ExactMatrix{{1}, {-1}} * ExactMatrix{{1, 1}};
  CHECK(m4.block(4, 4, 2, 2) == wzt);
  ExactMatrix rest = m4;
  rest.set_block(4, 4, ExactMatrix::zero(2, 2));
  CHECK(rest.is_zero());
}

TEST_CASE("minimal polynomial prediction") {
  CHECK(minimal_polynomial_prediction(both_zero()) == Polynomial{0, 0, -1, 0, 1});
  CHECK(minimal_polynomial_prediction(first_nonzero()) == Polynomial{0, 0, 0, -3, 0, 1});
  CHECK(minimal_polynomial_prediction(nilpotent()) == Polynomial::monomial(5));
  CHECK_THROWS_AS(minimal_polynomial_prediction(ones()), WrongCase);
}

TEST_CASE("mirrored drazin through the swap") {
  Rng rng(43);
  RandomBounds b;
  b.cfg = kGaussId;
  for (int trial = 0; trial < 15; ++trial) {
    DoubleStarSpec s = random_double_star(rng, b, DoubleStarTag::Mirrored);
    auto cf = double_star_drazin(s);
    auto gen = drazin_inverse(build_double_star(s));
    CHECK(cf.inverse == gen.inverse);
    CHECK(cf.index == gen.index);
    CHECK(cf.min_poly == gen.min_poly);
  }
}

TEST_CASE("double star moore penrose") {
  auto [r, wit] = double_star_mp(ones());
  CHECK(wit.s == Scalar(1));
  CHECK(wit.u == Scalar(1));
  CHECK(wit.t == Scalar(1));
  CHECK(wit.v == Scalar(1));
  REQUIRE(r.exists);
  ExactMatrix expect{{0, 1, 0, 0}, {1, 0, 0, -1}, {0, 0, 0, 1}, {0, -1, 1, 0}};
  CHECK(*r.matrix == expect);
  CHECK(verify_penrose(build_double_star(ones()), expect).all());

  DoubleStarSpec gid = spec({1, Scalar::i()}, {1, 1}, {1}, {1}, kGaussId);
  auto [ri, wi] = double_star_mp(gid);
  CHECK(wi.s.is_zero());
  CHECK(!ri.exists);
  CHECK(!moore_penrose(build_double_star(gid)).exists);

  DoubleStarSpec gconj = gid;
  gconj.cfg = kGaussConj;
  auto [rc, wc] = double_star_mp(gconj);
  CHECK(wc.s == Scalar(2));
  REQUIRE(rc.exists);
  CHECK(verify_penrose(build_double_star(gconj), *rc.matrix).all());
  CHECK(*rc.matrix == *moore_penrose(build_double_star(gconj)).matrix);
}

TEST_CASE("d-linked group inverse") {
  DLinkedSpec unit{ExactMatrix{{0, 1}, {1, 0}}, {Star{{1}, {1}}, Star{{1}, {1}}}};
  auto r = d_linked_group(unit);
  REQUIRE(r.exists);
  ExactMatrix m = build_d_linked(unit).m;
  CHECK(*r.matrix == inverse(m));
  ExactMatrix expect{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}};
  CHECK(*r.matrix == expect);

  DLinkedSpec off{ExactMatrix{{0, 1}, {1, 0}}, {zero_star(), Star{{1}, {1}}}};
  auto n = d_linked_group(off);
  CHECK(!n.exists);
  CHECK(n.offending_stars == std::vector<std::size_t>{1});
  CHECK(!group_inverse(build_d_linked(off).m).exists);

  Rng rng(47);
  DLinkedBounds b;
  for (int trial = 0; trial < 15; ++trial) {
    DLinkedSpec s = random_d_linked(rng, b, StarPairing::Nonzero);
    auto cf = d_linked_group(s);
    auto gen = group_inverse(build_d_linked(s).m);
    REQUIRE(cf.exists);
    REQUIRE(gen.exists);
    CHECK(*cf.matrix == *gen.matrix);
  }
}

TEST_CASE("d-linked index shift") {
  struct Case {
    ExactMatrix a;
    std::size_t predicted;
  };
  std::vector<Case> cases = {
      {ExactMatrix{{0, 1}, {0, 0}}, 4},
      {ExactMatrix::identity(2), 2},
      {ExactMatrix{{1, 0}, {0, 0}}, 3},
  };
  for (const auto& c : cases) {
    DLinkedSpec s{c.a, {zero_star(), zero_star()}};
    auto d = d_linked_drazin(s);
    CHECK(d.predicted_index == c.predicted);
    CHECK(d.result.index == c.predicted);
    CHECK(d.index_matches());
  }
  DLinkedSpec mixed{ExactMatrix::identity(2), {zero_star(), Star{{1}, {1}}}};
  CHECK_THROWS_AS(d_linked_drazin(mixed), HypothesisViolated);
}

TEST_CASE("d-linked moore penrose") {
  DLinkedSpec unit{ExactMatrix{{0, 1}, {1, 0}}, {Star{{1}, {1}}, Star{{1}, {1}}}};
  auto r = d_linked_mp(unit);
  REQUIRE(r.exists);
  CHECK(verify_penrose(build_d_linked(unit).m, *r.matrix).all());

  DLinkedSpec gi{ExactMatrix({{0}}, kGaussId), {Star{{1, Scalar::i()}, {1, 1}}}};
  auto n = d_linked_mp(gi);
  CHECK(!n.exists);
  CHECK(n.offending_stars == std::vector<std::size_t>{1});

  Rng rng(53);
  DLinkedBounds b;
  b.magnitude = 5;
  for (int trial = 0; trial < 15; ++trial) {
    DLinkedSpec s = random_d_linked(rng, b, StarPairing::Mixed);
    auto cf = d_linked_mp(s);
    auto gen = moore_penrose(build_d_linked(s).m);
    REQUIRE(cf.exists);
    REQUIRE(gen.exists);
    CHECK(*cf.matrix == *gen.matrix);
  }
}
