#include <doctest.h>

#include "ginv/closedform.hpp"
#include "ginv/errors.hpp"
#include "ginv/graphs.hpp"
#include "ginv/linalg.hpp"
#include "ginv/random_specs.hpp"

using namespace ginv;

namespace {

DoubleStarSpec ones_spec(std::size_t m, std::size_t n) {
  DoubleStarSpec s;
  s.a = 1;
  s.b = 1;
  s.x.assign(m, 1);
  s.y.assign(m, 1);
  s.z.assign(n, 1);
  s.w.assign(n, 1);
  return s;
}

DoubleStarSpec both_zero_spec() {
  DoubleStarSpec s;
  s.a = 1;
  s.b = 1;
  s.x = {1, 1};
  s.y = {1, -1};
  s.z = {1, 1};
  s.w = {1, -1};
  return s;
}

DoubleStarSpec nilpotent_spec() {
  DoubleStarSpec s = both_zero_spec();
  s.y = {1, -2};
  return s;
}

}  // namespace

TEST_CASE("rref") {
  auto r = rref(ExactMatrix{{2, 4}, {1, 2}});
  CHECK(r.reduced == ExactMatrix{{1, 2}, {0, 0}});
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.rank() == 1);

  auto id = rref(ExactMatrix::identity(3));
  CHECK(id.reduced == ExactMatrix::identity(3));
  CHECK(id.rank() == 3);

  auto z = rref(ExactMatrix::zero(2, 3));
  CHECK(z.reduced == ExactMatrix::zero(2, 3));
  CHECK(z.rank() == 0);
}

TEST_CASE("inverse") {
  CHECK(inverse(ExactMatrix{{1, 1}, {0, 1}}) == ExactMatrix{{1, -1}, {0, 1}});
  CHECK_THROWS_AS(inverse(ExactMatrix::zero(2, 2)), NotInvertible);
  CHECK_THROWS_AS(inverse(ExactMatrix{{1, 2}}), DimensionMismatch);
  CHECK(inverse(ExactMatrix{{2, 0}, {0, Scalar(1, 3)}}) == ExactMatrix{{Scalar(1, 2), 0}, {0, 3}});
}

TEST_CASE("full rank factorization") {
  auto f = full_rank_factorize(ExactMatrix{{1, 2}, {2, 4}});
  CHECK(f.f == ExactMatrix{{1}, {2}});
  CHECK(f.g == ExactMatrix{{1, 2}});
  auto i = full_rank_factorize(ExactMatrix::identity(3));
  CHECK(i.f == ExactMatrix::identity(3));
  CHECK(i.g == ExactMatrix::identity(3));
  CHECK_THROWS_AS(full_rank_factorize(ExactMatrix::zero(2, 2)), ZeroMatrix);

  ExactMatrix m = build_double_star(ones_spec(2, 2));
  auto fm = full_rank_factorize(m);
  CHECK(fm.rank == 4);
  CHECK(fm.f.cols() == 4);
  CHECK(fm.g.rows() == 4);
  CHECK(fm.f * fm.g == m);
}

TEST_CASE("minimal and characteristic polynomials") {
  CHECK(minimal_polynomial(ExactMatrix::zero(3, 3)) == Polynomial::monomial(1));
  CHECK(minimal_polynomial(ExactMatrix{{0, 1}, {0, 0}}) == Polynomial::monomial(2));
  // ab = 1 gives x^2 (x^2 - 1)
  CHECK(minimal_polynomial(build_double_star(both_zero_spec())) == Polynomial{0, 0, -1, 0, 1});

  CHECK(characteristic_polynomial(ExactMatrix::identity(2)) == Polynomial{1, -2, 1});
  CHECK(characteristic_polynomial(ExactMatrix{{0, 1}, {1, 0}}) == Polynomial{-1, 0, 1});

  Rng rng(3);
  RandomBounds b;
  b.cfg = FieldConfig::gaussian(Involution::Identity);
  for (int trial = 0; trial < 40; ++trial) {
    ExactMatrix a = random_square(rng, static_cast<std::size_t>(rng.uniform(1, 6)), b);
    Polynomial psi = minimal_polynomial(a);
    Polynomial delta = characteristic_polynomial(a);
    CHECK(psi.leading().is_one());
    CHECK(psi(a).is_zero());
    CHECK(delta(a).is_zero());
    CHECK(divmod(delta, psi).second.is_zero());
  }
}

TEST_CASE("schur corner inverse") {
  CHECK(schur_corner_inverse(ExactMatrix{{2}}, ExactMatrix{{1}}, ExactMatrix{{1}}) ==
        ExactMatrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(schur_corner_inverse(ExactMatrix{{1}}, ExactMatrix{{1}}, ExactMatrix{{1}}),
                  NotInvertible);

  // Oracle: generic inverse of the assembled 4x4.
  Rng rng(17);
  RandomBounds b;
  int checked = 0;
  while (checked < 30) {
    ExactMatrix alpha = random_matrix(rng, 3, 3, b);
    ExactMatrix beta = random_matrix(rng, 3, 1, b);
    ExactMatrix gamma = random_matrix(rng, 1, 3, b);
    if (rank(alpha - beta * gamma) < 3) continue;
    ExactMatrix full = vstack(hstack(alpha, beta), hstack(gamma, ExactMatrix::identity(1)));
    CHECK(schur_corner_inverse(alpha, beta, gamma) == inverse(full));
    ++checked;
  }
}

TEST_CASE("null space and column space") {
  ExactMatrix k = null_space(ExactMatrix{{1, 1}});
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(!k.is_zero());
  CHECK(null_space(ExactMatrix::identity(3)).cols() == 0);
  ExactMatrix col = column_space_basis(ExactMatrix{{1, 2}, {2, 4}});
  REQUIRE(col.cols() == 1);
  CHECK(col(1, 0) == Scalar(2) * col(0, 0));
}

TEST_CASE("core nilpotent decomposition") {
  ExactMatrix inv{{1, 1}, {0, 1}};
  auto d = core_nilpotent(inv);
  CHECK(d.nil_index == 0);
  CHECK(d.core.rows() == 2);
  CHECK(d.core == d.u_inv * inv * d.u);

  ExactMatrix n{{0, 1}, {0, 0}};
  auto dn = core_nilpotent(n);
  CHECK(dn.core.rows() == 0);
  CHECK(dn.nil_index == 2);
  CHECK(dn.reassemble() == n);

  auto d5 = core_nilpotent(build_double_star(nilpotent_spec()));
  CHECK(d5.core.rows() == 0);
  CHECK(d5.nil_index == 5);

  Rng rng(23);
  RandomBounds b;
  for (int trial = 0; trial < 30; ++trial) {
    ExactMatrix a = random_square(rng, static_cast<std::size_t>(rng.uniform(1, 6)), b);
    auto cn = core_nilpotent(a);
    CHECK(cn.reassemble() == a);
    CHECK(cn.u * cn.u_inv == ExactMatrix::identity(a.rows()));
    if (cn.core.rows() > 0) CHECK(rank(cn.core) == cn.core.rows());
    if (cn.nil.rows() > 0) CHECK(cn.nil.pow(cn.nil_index).is_zero());
  }
}
