#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ginv/linalg.hpp"
#include "ginv/matrix.hpp"
#include "ginv/polynomial.hpp"

namespace ginv {

enum class InverseKind { Group, Drazin, MoorePenrose };
enum class Method { General, ClosedForm };

std::string to_string(InverseKind kind);
std::string to_string(Method method);

struct DrazinResult {
  ExactMatrix inverse;
  std::size_t index = 0;
  Polynomial min_poly;
  Polynomial g_part;  // min_poly = lambda^index * g_part
};

// A named scalar that decides existence, e.g. "s" = sum x_i * conj(x_i).
struct Witness {
  std::string name;
  Scalar value;
};

// Outcome of an inverse computation. A missing inverse is a normal result:
// exists is false, matrix is empty and reason names the violated condition.
struct InverseReport {
  InverseKind kind = InverseKind::Group;
  bool exists = false;
  std::optional<ExactMatrix> matrix;
  std::optional<DrazinResult> drazin;
  std::vector<Witness> witnesses;
  std::vector<std::size_t> offending_stars;  // 1-based star numbers
  std::string reason;
  Method method = Method::General;
};

// Cline: A = FG has a group inverse iff GF is invertible, A# = F(GF)^-2 G.
// The zero matrix is its own group inverse.
InverseReport group_inverse(const ExactMatrix& a);

// Drazin inverse from the minimal polynomial lambda^k g(lambda):
// A^D = A^k X^(k+1) with X = -(g_1 I + g_2 A + ... + g_l A^(l-1)) / g_0.
DrazinResult drazin_inverse(const ExactMatrix& a);

// Independent route through the core-nilpotent decomposition,
// A^D = U diag(C^-1, 0) U^-1.
DrazinResult drazin_via_core_nilpotent(const ExactMatrix& a);

// Wraps a Drazin result as an always-existing report.
InverseReport drazin_report(DrazinResult result, Method method);

// A * ((BA)^D)^2 * B for A m x n and B n x m.
ExactMatrix cline_product_drazin(const ExactMatrix& a, const ExactMatrix& b);

// A+ = G*(GG*)^-1 (F*F)^-1 F* for a full rank factorization A = FG. Reports
// non-existence when either Gram matrix is singular under cfg's involution.
InverseReport moore_penrose(const ExactMatrix& a);

bool verify_drazin(const ExactMatrix& a, const ExactMatrix& x, std::size_t k);
// Group inverse equations: AXA = A, XAX = X, AX = XA.
bool verify_group(const ExactMatrix& a, const ExactMatrix& x);

struct PenroseFlags {
  bool axa = false;         // (1) AXA = A
  bool xax = false;         // (2) XAX = X
  bool ax_selfadj = false;  // (3) (AX)* = AX
  bool xa_selfadj = false;  // (4) (XA)* = XA

  bool all() const { return axa && xax && ax_selfadj && xa_selfadj; }
  std::array<bool, 4> as_array() const {
    return {axa, xax, ax_selfadj, xa_selfadj};
  }
};

PenroseFlags verify_penrose(const ExactMatrix& a, const ExactMatrix& x);

enum class Side { Left, Right };

struct OneSidedInverse {
  ExactMatrix matrix;
  // True for B*(BB*)^-1 (right) or (C*C)^-1 C* (left); false when the Gram
  // matrix is singular and a pivot-based inverse was returned instead.
  bool gram_based = false;
};

// Right inverse of a full row rank matrix or left inverse of a full column
// rank matrix. Throws RankDeficient otherwise.
OneSidedInverse one_sided_inverse(const ExactMatrix& a, Side side);

}  // namespace ginv
