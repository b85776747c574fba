#pragma once

#include <cstddef>
#include <vector>

#include "ginv/matrix.hpp"
#include "ginv/polynomial.hpp"

namespace ginv {

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Gauss-Jordan elimination; the pivot in each column is the first nonzero
// entry at or below the current row.
RrefResult rref(const ExactMatrix& a);
std::size_t rank(const ExactMatrix& a);

// Throws NotInvertible (rank deficient) or DimensionMismatch (non-square).
ExactMatrix inverse(const ExactMatrix& a);

struct FullRankFactorization {
  ExactMatrix f;  // m x r, full column rank
  ExactMatrix g;  // r x n, full row rank
  std::size_t rank = 0;
};

// F = pivot columns of A, G = nonzero rows of rref(A). Throws ZeroMatrix
// for rank 0.
FullRankFactorization full_rank_factorize(const ExactMatrix& a);

// Monic annihilating polynomial of least degree, from the first linear
// dependence among vec(I), vec(A), vec(A^2), ...
Polynomial minimal_polynomial(const ExactMatrix& a);

// det(lambda I - A) by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const ExactMatrix& a);

// Inverse of [[alpha, beta], [gamma, I]] through the Schur complement
// sigma = alpha - beta * gamma. Throws NotInvertible when sigma is singular.
ExactMatrix schur_corner_inverse(const ExactMatrix& alpha,
                                 const ExactMatrix& beta,
                                 const ExactMatrix& gamma);

// Columns form a basis of ker(A) (resp. col(A)); zero columns when trivial.
ExactMatrix null_space(const ExactMatrix& a);
ExactMatrix column_space_basis(const ExactMatrix& a);

// A = u * blockdiag(core, nil) * u^{-1}, core invertible, nil nilpotent with
// nil^nil_index = 0 != nil^(nil_index - 1).
struct CoreNilpotentDecomposition {
  ExactMatrix u;
  ExactMatrix u_inv;
  ExactMatrix core;
  ExactMatrix nil;
  std::size_t nil_index = 0;

  ExactMatrix reassemble() const;
};

CoreNilpotentDecomposition core_nilpotent(const ExactMatrix& a);

}  // namespace ginv
