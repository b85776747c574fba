#include "ginv/linalg.hpp"

#include <string>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

void require_square(const ExactMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix is " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
}

// Echelon basis for the Krylov dependence search. Each stored vector is
// zero at the pivots of all vectors stored before it.
struct KrylovVector {
  std::vector<Scalar> v;
  std::size_t pivot;
  std::vector<Scalar> combo;  // v = sum combo[j] * vec(A^j)
};

}  // namespace

RrefResult rref(const ExactMatrix& a) {
  ExactMatrix r = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row) {
      for (std::size_t c = col; c < r.cols(); ++c) std::swap(r(p, c), r(row, c));
    }
    const Scalar piv_inv = r(row, col).inv();
    for (std::size_t c = col; c < r.cols(); ++c) r(row, c) *= piv_inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Scalar factor = r(i, col);
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (!r(row, c).is_zero()) r(i, c) -= factor * r(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const ExactMatrix& a) { return rref(a).rank(); }

ExactMatrix inverse(const ExactMatrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  auto aug = rref(hstack(a, ExactMatrix::identity(n, a.cfg())));
  if (aug.rank() < n || (n > 0 && aug.pivot_cols[n - 1] != n - 1)) {
    throw NotInvertible();
  }
  return aug.reduced.block(0, n, n, n);
}

FullRankFactorization full_rank_factorize(const ExactMatrix& a) {
  auto rr = rref(a);
  const std::size_t r = rr.rank();
  if (r == 0) throw ZeroMatrix();
  ExactMatrix f(a.rows(), r, a.cfg());
  for (std::size_t j = 0; j < r; ++j) f.set_block(0, j, a.column_at(rr.pivot_cols[j]));
  return {std::move(f), rr.reduced.block(0, 0, r, a.cols()), r};
}

Polynomial minimal_polynomial(const ExactMatrix& a) {
  require_square(a, "minimal_polynomial");
  const std::size_t n = a.rows();
  std::vector<KrylovVector> basis;
  ExactMatrix power = ExactMatrix::identity(n, a.cfg());
  for (std::size_t d = 0; d <= n; ++d) {
    if (d > 0) power = power * a;
    std::vector<Scalar> v = power.entries();
    std::vector<Scalar> combo(d + 1);
    combo[d] = Scalar(1);
    for (const auto& b : basis) {
      if (v[b.pivot].is_zero()) continue;
      const Scalar f = v[b.pivot] / b.v[b.pivot];
      for (std::size_t i = b.pivot; i < v.size(); ++i) {
        if (!b.v[i].is_zero()) v[i] -= f * b.v[i];
      }
      for (std::size_t j = 0; j < b.combo.size(); ++j) combo[j] -= f * b.combo[j];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return Polynomial(std::move(combo));
    basis.push_back({std::move(v), pivot, std::move(combo)});
  }
  throw Error("minimal_polynomial: no dependence found up to degree n");
}

Polynomial characteristic_polynomial(const ExactMatrix& a) {
  require_square(a, "characteristic_polynomial");
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  const auto id = ExactMatrix::identity(n, a.cfg());
  ExactMatrix m = ExactMatrix::zero(n, n, a.cfg());
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    ExactMatrix am = a * m;
    Scalar trace;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

ExactMatrix schur_corner_inverse(const ExactMatrix& alpha,
                                 const ExactMatrix& beta,
                                 const ExactMatrix& gamma) {
  const std::size_t p = alpha.rows();
  const std::size_t q = gamma.rows();
  if (!alpha.is_square() || beta.rows() != p || beta.cols() != q ||
      gamma.cols() != p) {
    throw DimensionMismatch("schur_corner_inverse: blocks are not conformable");
  }
  const ExactMatrix sigma = alpha - beta * gamma;
  ExactMatrix sigma_inv;
  try {
    sigma_inv = inverse(sigma);
  } catch (const NotInvertible&) {
    throw NotInvertible("Schur complement alpha - beta*gamma is singular");
  }
  ExactMatrix out(p + q, p + q, alpha.cfg());
  out.set_block(0, 0, sigma_inv);
  out.set_block(0, p, -(sigma_inv * beta));
  out.set_block(p, 0, -(gamma * sigma_inv));
  out.set_block(p, p, ExactMatrix::identity(q, alpha.cfg()) +
                          gamma * sigma_inv * beta);
  return out;
}

ExactMatrix null_space(const ExactMatrix& a) {
  auto rr = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  ExactMatrix basis(n, n - rr.rank(), a.cfg());
  std::size_t out_col = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, out_col) = Scalar(1);
    for (std::size_t i = 0; i < rr.rank(); ++i) {
      basis(rr.pivot_cols[i], out_col) = -rr.reduced(i, f);
    }
    ++out_col;
  }
  return basis;
}

ExactMatrix column_space_basis(const ExactMatrix& a) {
  auto rr = rref(a);
  ExactMatrix basis(a.rows(), rr.rank(), a.cfg());
  for (std::size_t j = 0; j < rr.rank(); ++j) {
    basis.set_block(0, j, a.column_at(rr.pivot_cols[j]));
  }
  return basis;
}

ExactMatrix CoreNilpotentDecomposition::reassemble() const {
  return u * block_diag(core, nil) * u_inv;
}

CoreNilpotentDecomposition core_nilpotent(const ExactMatrix& a) {
  require_square(a, "core_nilpotent");
  const std::size_t n = a.rows();
  ExactMatrix power = ExactMatrix::identity(n, a.cfg());
  std::size_t k = 0;
  std::size_t current_rank = n;
  for (;;) {
    ExactMatrix next = power * a;
    std::size_t next_rank = rank(next);
    if (next_rank == current_rank) break;
    power = std::move(next);
    current_rank = next_rank;
    ++k;
  }
  // power = A^k now spans the core part; its kernel carries the nilpotent part.
  ExactMatrix u = hstack(column_space_basis(power), null_space(power));
  ExactMatrix u_inv = inverse(u);
  ExactMatrix t = u_inv * a * u;
  const std::size_t r = current_rank;
  if (!t.block(0, r, r, n - r).is_zero() || !t.block(r, 0, n - r, r).is_zero()) {
    throw Error("core_nilpotent: A^k subspaces are not invariant");
  }
  return {std::move(u), std::move(u_inv), t.block(0, 0, r, r),
          t.block(r, r, n - r, n - r), k};
}

}  // namespace ginv
