#include "ginv/geninv.hpp"

#include "ginv/errors.hpp"

namespace ginv {

std::string to_string(InverseKind kind) {
  switch (kind) {
    case InverseKind::Group: return "group";
    case InverseKind::Drazin: return "drazin";
    case InverseKind::MoorePenrose: return "mp";
  }
  return "unknown";
}

std::string to_string(Method method) {
  return method == Method::General ? "general" : "closed_form";
}

namespace {

void require_square(const ExactMatrix& a, const char* op) {
  if (!a.is_square()) throw DimensionMismatch(std::string(op) + ": non-square");
}

std::optional<ExactMatrix> try_inverse(const ExactMatrix& a) {
  try {
    return inverse(a);
  } catch (const NotInvertible&) {
    return std::nullopt;
  }
}

}  // namespace

InverseReport group_inverse(const ExactMatrix& a) {
  require_square(a, "group_inverse");
  InverseReport report;
  report.kind = InverseKind::Group;
  if (a.is_zero()) {
    report.exists = true;
    report.matrix = a;
    return report;
  }
  auto frf = full_rank_factorize(a);
  auto gf_inv = try_inverse(frf.g * frf.f);
  if (!gf_inv) {
    report.reason = "GF is singular for the full rank factorization A = FG";
    return report;
  }
  report.exists = true;
  report.matrix = frf.f * *gf_inv * *gf_inv * frf.g;
  return report;
}

DrazinResult drazin_inverse(const ExactMatrix& a) {
  require_square(a, "drazin_inverse");
  const std::size_t n = a.rows();
  Polynomial psi = minimal_polynomial(a);
  auto [k, g] = zero_multiplicity(psi);
  if (g.degree() == 0) {
    return {ExactMatrix::zero(n, n, a.cfg()), k, std::move(psi), std::move(g)};
  }
  // X = -(g_1 I + g_2 A + ... + g_l A^(l-1)) / g_0, by Horner.
  const auto id = ExactMatrix::identity(n, a.cfg());
  ExactMatrix x = ExactMatrix::zero(n, n, a.cfg());
  for (std::size_t j = g.degree(); j >= 1; --j) x = x * a + id * g.coeff(j);
  x *= -g.coeff(0).inv();
  ExactMatrix ad = a.pow(k) * x.pow(k + 1);
  return {std::move(ad), k, std::move(psi), std::move(g)};
}

DrazinResult drazin_via_core_nilpotent(const ExactMatrix& a) {
  require_square(a, "drazin_via_core_nilpotent");
  auto cn = core_nilpotent(a);
  ExactMatrix inner = block_diag(inverse(cn.core),
                                 ExactMatrix::zero(cn.nil.rows(), cn.nil.cols(),
                                                   a.cfg()));
  ExactMatrix ad = cn.u * inner * cn.u_inv;
  // The core and nilpotent parts have coprime minimal polynomials.
  Polynomial g = minimal_polynomial(cn.core);
  Polynomial psi = Polynomial::monomial(cn.nil_index) * g;
  return {std::move(ad), cn.nil_index, std::move(psi), std::move(g)};
}

InverseReport drazin_report(DrazinResult result, Method method) {
  InverseReport report;
  report.kind = InverseKind::Drazin;
  report.exists = true;
  report.matrix = result.inverse;
  report.drazin = std::move(result);
  report.method = method;
  return report;
}

ExactMatrix cline_product_drazin(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionMismatch("cline_product_drazin: A must be m x n and B n x m");
  }
  ExactMatrix ba_d = drazin_inverse(b * a).inverse;
  return a * ba_d * ba_d * b;
}

InverseReport moore_penrose(const ExactMatrix& a) {
  InverseReport report;
  report.kind = InverseKind::MoorePenrose;
  if (a.is_zero()) {
    report.exists = true;
    report.matrix = ExactMatrix::zero(a.cols(), a.rows(), a.cfg());
    return report;
  }
  auto frf = full_rank_factorize(a);
  const ExactMatrix f_adj = frf.f.adjoint();
  const ExactMatrix g_adj = frf.g.adjoint();
  auto ggs_inv = try_inverse(frf.g * g_adj);
  auto fsf_inv = try_inverse(f_adj * frf.f);
  if (!ggs_inv || !fsf_inv) {
    if (!ggs_inv) report.reason = "GG* is singular";
    if (!fsf_inv) {
      report.reason += report.reason.empty() ? "F*F is singular"
                                             : "; F*F is singular";
    }
    return report;
  }
  report.exists = true;
  report.matrix = g_adj * *ggs_inv * *fsf_inv * f_adj;
  return report;
}

bool verify_drazin(const ExactMatrix& a, const ExactMatrix& x, std::size_t k) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) return false;
  const ExactMatrix ak = a.pow(k);
  const ExactMatrix ax = a * x;
  return a * ak * x == ak && x * ax == x && ax == x * a;
}

bool verify_group(const ExactMatrix& a, const ExactMatrix& x) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) return false;
  const ExactMatrix ax = a * x;
  return ax * a == a && x * ax == x && ax == x * a;
}

PenroseFlags verify_penrose(const ExactMatrix& a, const ExactMatrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionMismatch("verify_penrose: X must have the transposed shape of A");
  }
  const ExactMatrix ax = a * x;
  const ExactMatrix xa = x * a;
  PenroseFlags flags;
  flags.axa = ax * a == a;
  flags.xax = x * ax == x;
  flags.ax_selfadj = ax.adjoint() == ax;
  flags.xa_selfadj = xa.adjoint() == xa;
  return flags;
}

namespace {

// Right inverse of a full row rank matrix: invert the pivot-column minor.
ExactMatrix pivot_right_inverse(const ExactMatrix& b) {
  auto rr = rref(b);
  const std::size_t r = b.rows();
  ExactMatrix minor(r, r, b.cfg());
  for (std::size_t j = 0; j < r; ++j) minor.set_block(0, j, b.column_at(rr.pivot_cols[j]));
  ExactMatrix minor_inv = inverse(minor);
  ExactMatrix out(b.cols(), r, b.cfg());
  for (std::size_t j = 0; j < r; ++j) {
    out.set_block(rr.pivot_cols[j], 0, minor_inv.block(j, 0, 1, r));
  }
  return out;
}

}  // namespace

OneSidedInverse one_sided_inverse(const ExactMatrix& a, Side side) {
  const std::size_t r = rank(a);
  if (side == Side::Right) {
    if (r != a.rows()) throw RankDeficient("right inverse needs full row rank");
    if (auto gram = try_inverse(a * a.adjoint())) {
      return {a.adjoint() * *gram, true};
    }
    return {pivot_right_inverse(a), false};
  }
  if (r != a.cols()) throw RankDeficient("left inverse needs full column rank");
  if (auto gram = try_inverse(a.adjoint() * a)) {
    return {*gram * a.adjoint(), true};
  }
  return {pivot_right_inverse(a.transpose()).transpose(), false};
}

}  // namespace ginv
