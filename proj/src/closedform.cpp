#include "ginv/closedform.hpp"

#include <array>
#include <string>

#include "ginv/errors.hpp"

namespace ginv {

std::string to_string(DoubleStarTag tag) {
  switch (tag) {
    case DoubleStarTag::GroupInvertible: return "group_invertible";
    case DoubleStarTag::BothZero: return "both_zero";
    case DoubleStarTag::FirstNonzeroSecondZero: return "first_nonzero_second_zero";
    case DoubleStarTag::NilpotentCase: return "nilpotent";
    case DoubleStarTag::Mirrored: return "mirrored";
  }
  return "unknown";
}

namespace {

// Writes blocks into the (1, m, 1, n) partition of a double star matrix.
class DoubleStarBlocks {
 public:
  explicit DoubleStarBlocks(const DoubleStarSpec& spec)
      : offsets_{0, 1, spec.m() + 1, spec.m() + 2},
        out_(spec.order(), spec.order(), spec.cfg) {}

  void put(std::size_t bi, std::size_t bj, const ExactMatrix& block) {
    out_.set_block(offsets_[bi], offsets_[bj], block);
  }
  void put(std::size_t bi, std::size_t bj, const Scalar& s) {
    out_(offsets_[bi], offsets_[bj]) = s;
  }
  ExactMatrix take() { return std::move(out_); }

 private:
  std::array<std::size_t, 4> offsets_;
  ExactMatrix out_;
};

ExactMatrix col(const std::vector<Scalar>& v, FieldConfig cfg) {
  return ExactMatrix::column(v, cfg);
}
ExactMatrix row(const std::vector<Scalar>& v, FieldConfig cfg) {
  return ExactMatrix::row(v, cfg);
}

std::vector<Scalar> involuted(const std::vector<Scalar>& v, FieldConfig cfg) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(involute(e, cfg));
  return out;
}

void require_case(const DoubleStarCase& c, DoubleStarTag want, const char* op) {
  if (c.tag != want) {
    throw WrongCase(std::string(op) + ": spec is " + to_string(c.tag) +
                    ", expected " + to_string(want));
  }
}

// Case x^T y = z^T w = 0: index 2.
ExactMatrix both_zero_drazin(const DoubleStarSpec& s) {
  const FieldConfig cfg = s.cfg;
  DoubleStarBlocks blk(s);
  blk.put(0, 1, row(s.x, cfg));
  blk.put(0, 2, s.a);
  blk.put(1, 0, col(s.y, cfg));
  blk.put(1, 3, s.b.inv() * (col(s.y, cfg) * row(s.z, cfg)));
  blk.put(2, 0, s.b);
  blk.put(2, 3, row(s.z, cfg));
  blk.put(3, 1, s.a.inv() * (col(s.w, cfg) * row(s.x, cfg)));
  blk.put(3, 2, col(s.w, cfg));
  return (s.a * s.b).inv() * blk.take();
}

// Case x^T y != 0, z^T w = 0, zeta != 0: index 3.
ExactMatrix first_nonzero_drazin(const DoubleStarSpec& s, const Scalar& zeta) {
  const FieldConfig cfg = s.cfg;
  const Scalar zi = zeta.inv();
  const Scalar ab = s.a * s.b;
  DoubleStarBlocks blk(s);
  blk.put(0, 1, row(s.x, cfg));
  blk.put(0, 2, s.a);
  blk.put(1, 0, col(s.y, cfg));
  blk.put(1, 3, zi * s.a * (col(s.y, cfg) * row(s.z, cfg)));
  blk.put(2, 0, s.b);
  blk.put(2, 3, zi * ab * row(s.z, cfg));
  blk.put(3, 1, zi * s.b * (col(s.w, cfg) * row(s.x, cfg)));
  blk.put(3, 2, zi * ab * col(s.w, cfg));
  return zi * blk.take();
}

}  // namespace

DoubleStarCase classify_double_star(const DoubleStarSpec& spec) {
  spec.validate();
  DoubleStarCase c;
  c.xy = dot(spec.x, spec.y);
  c.zw = dot(spec.z, spec.w);
  const bool xy0 = c.xy.is_zero();
  const bool zw0 = c.zw.is_zero();
  if (!xy0 && !zw0) {
    c.tag = DoubleStarTag::GroupInvertible;
  } else if (xy0 && zw0) {
    c.tag = DoubleStarTag::BothZero;
  } else if (xy0) {
    c.tag = DoubleStarTag::Mirrored;
  } else {
    c.zeta = c.xy + spec.a * spec.b;
    c.tag = c.zeta->is_zero() ? DoubleStarTag::NilpotentCase
                              : DoubleStarTag::FirstNonzeroSecondZero;
  }
  return c;
}

InverseReport double_star_group(const DoubleStarSpec& spec) {
  const auto c = classify_double_star(spec);
  require_case(c, DoubleStarTag::GroupInvertible, "double_star_group");
  const FieldConfig cfg = spec.cfg;
  const std::size_t m = spec.m();
  const std::size_t order = spec.order();

  ExactMatrix f(order, 4, cfg);
  f(0, 1) = Scalar(1);
  f(0, 2) = spec.a;
  f.set_block(1, 0, col(spec.y, cfg));
  f(m + 1, 0) = spec.b;
  f(m + 1, 3) = Scalar(1);
  f.set_block(m + 2, 2, col(spec.w, cfg));

  ExactMatrix g(4, order, cfg);
  g(0, 0) = Scalar(1);
  g.set_block(1, 1, row(spec.x, cfg));
  g(2, m + 1) = Scalar(1);
  g.set_block(3, m + 2, row(spec.z, cfg));

  const ExactMatrix gf({{0, 1, spec.a, 0},
                        {c.xy, 0, 0, 0},
                        {spec.b, 0, 0, 1},
                        {0, 0, c.zw, 0}},
                       cfg);
  const ExactMatrix gf_inv = inverse(gf);

  InverseReport report;
  report.kind = InverseKind::Group;
  report.method = Method::ClosedForm;
  report.exists = true;
  report.matrix = f * gf_inv * gf_inv * g;
  report.witnesses = {{"xy", c.xy}, {"zw", c.zw}};

  // M is invertible only when it is the 4x4 instance; otherwise the zero
  // eigenvalue is semisimple and psi_M = lambda * psi_GF.
  const std::size_t index = order == 4 ? 0 : 1;
  Polynomial g_part = minimal_polynomial(gf);
  report.drazin = DrazinResult{*report.matrix, index,
                               Polynomial::monomial(index) * g_part, g_part};
  return report;
}

DrazinResult double_star_drazin(const DoubleStarSpec& spec) {
  const auto c = classify_double_star(spec);
  const Scalar ab = spec.a * spec.b;
  switch (c.tag) {
    case DoubleStarTag::GroupInvertible:
      return *double_star_group(spec).drazin;
    case DoubleStarTag::BothZero: {
      Polynomial g{-ab, 0, 1};
      return {both_zero_drazin(spec), 2, Polynomial::monomial(2) * g, g};
    }
    case DoubleStarTag::FirstNonzeroSecondZero: {
      Polynomial g{-*c.zeta, 0, 1};
      return {first_nonzero_drazin(spec, *c.zeta), 3,
              Polynomial::monomial(3) * g, g};
    }
    case DoubleStarTag::NilpotentCase:
      return {ExactMatrix::zero(spec.order(), spec.order(), spec.cfg), 5,
              Polynomial::monomial(5), Polynomial{1}};
    case DoubleStarTag::Mirrored: {
      auto swapped = swap_stars(spec);
      DrazinResult inner = double_star_drazin(swapped.spec);
      inner.inverse = swapped.p.transpose() * inner.inverse * swapped.p;
      return inner;
    }
  }
  throw Error("double_star_drazin: unhandled case");
}

Polynomial minimal_polynomial_prediction(const DoubleStarSpec& spec) {
  const auto c = classify_double_star(spec);
  const Scalar ab = spec.a * spec.b;
  switch (c.tag) {
    case DoubleStarTag::GroupInvertible:
      throw WrongCase(
          "minimal_polynomial_prediction: no prediction for group invertible "
          "specs");
    case DoubleStarTag::BothZero:
      return Polynomial{0, 0, -ab, 0, 1};
    case DoubleStarTag::FirstNonzeroSecondZero:
      return Polynomial{0, 0, 0, -*c.zeta, 0, 1};
    case DoubleStarTag::NilpotentCase:
      return Polynomial::monomial(5);
    case DoubleStarTag::Mirrored:
      return minimal_polynomial_prediction(swap_stars(spec).spec);
  }
  throw Error("minimal_polynomial_prediction: unhandled case");
}

std::pair<InverseReport, MPWitness> double_star_mp(const DoubleStarSpec& spec) {
  spec.validate();
  const FieldConfig cfg = spec.cfg;
  MPWitness wit{gram(spec.x, cfg), gram(spec.y, cfg), gram(spec.z, cfg),
                gram(spec.w, cfg)};

  InverseReport report;
  report.kind = InverseKind::MoorePenrose;
  report.method = Method::ClosedForm;
  report.witnesses = {{"s", wit.s}, {"u", wit.u}, {"t", wit.t}, {"v", wit.v}};
  if (!wit.all_nonzero()) {
    for (const auto& w : report.witnesses) {
      if (!w.value.is_zero()) continue;
      report.reason += (report.reason.empty() ? "" : ", ") + w.name;
    }
    report.reason += " = 0";
    return {std::move(report), wit};
  }

  const ExactMatrix x_bar = col(involuted(spec.x, cfg), cfg);
  const ExactMatrix z_bar = col(involuted(spec.z, cfg), cfg);
  const ExactMatrix y_adj = row(involuted(spec.y, cfg), cfg);
  const ExactMatrix w_adj = row(involuted(spec.w, cfg), cfg);
  const Scalar s_inv = wit.s.inv();
  const Scalar u_inv = wit.u.inv();
  const Scalar t_inv = wit.t.inv();
  const Scalar v_inv = wit.v.inv();

  DoubleStarBlocks blk(spec);
  blk.put(0, 1, u_inv * y_adj);
  blk.put(1, 0, s_inv * x_bar);
  blk.put(1, 3, -(s_inv * spec.a * v_inv) * (x_bar * w_adj));
  blk.put(2, 3, v_inv * w_adj);
  blk.put(3, 1, -(t_inv * spec.b * u_inv) * (z_bar * y_adj));
  blk.put(3, 2, t_inv * z_bar);

  report.exists = true;
  report.matrix = blk.take();
  return {std::move(report), wit};
}

InverseReport d_linked_group(const DLinkedSpec& spec) {
  auto mats = build_d_linked(spec);
  const FieldConfig cfg = spec.cfg();
  const std::size_t n = spec.a.rows();
  const std::size_t leaves = spec.leaf_count();

  InverseReport report;
  report.kind = InverseKind::Group;
  report.method = Method::ClosedForm;
  std::vector<Scalar> bc_inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar d = dot(spec.stars[i].x, spec.stars[i].y);
    report.witnesses.push_back({"xy_" + std::to_string(i + 1), d});
    if (d.is_zero()) {
      report.offending_stars.push_back(i + 1);
    } else {
      bc_inv[i] = d.inv();
    }
  }
  if (!report.offending_stars.empty()) {
    report.reason = "x_i^T y_i = 0 for some star, so BC is singular";
    return report;
  }

  const ExactMatrix bc_inv_m = ExactMatrix::diagonal(bc_inv, cfg);
  const ExactMatrix bc_inv_b = bc_inv_m * mats.b;
  const ExactMatrix c_bc_inv = mats.c * bc_inv_m;
  ExactMatrix out(n + leaves, n + leaves, cfg);
  out.set_block(0, n, bc_inv_b);
  out.set_block(n, 0, c_bc_inv);
  out.set_block(n, n, -(c_bc_inv * spec.a * bc_inv_b));
  report.exists = true;
  report.matrix = std::move(out);
  return report;
}

DLinkedDrazin d_linked_drazin(const DLinkedSpec& spec) {
  auto mats = build_d_linked(spec);
  std::string offending;
  for (std::size_t i = 0; i < spec.stars.size(); ++i) {
    if (!dot(spec.stars[i].x, spec.stars[i].y).is_zero()) {
      offending += (offending.empty() ? "" : ", ") + std::to_string(i + 1);
    }
  }
  if (!offending.empty()) {
    throw HypothesisViolated("d_linked_drazin: x_i^T y_i != 0 for stars " +
                             offending);
  }
  const std::size_t base_index = zero_multiplicity(minimal_polynomial(spec.a)).k;
  return {drazin_inverse(mats.m), base_index + 2};
}

InverseReport d_linked_mp(const DLinkedSpec& spec) {
  auto mats = build_d_linked(spec);
  const FieldConfig cfg = spec.cfg();
  const std::size_t n = spec.a.rows();
  const std::size_t leaves = spec.leaf_count();

  InverseReport report;
  report.kind = InverseKind::MoorePenrose;
  report.method = Method::ClosedForm;
  std::vector<Scalar> bbs_inv(n);  // BB* = diag(x_i^T conj(x_i))
  std::vector<Scalar> csc_inv(n);  // C*C = diag(conj(y_i)^T y_i)
  for (std::size_t i = 0; i < n; ++i) {
    Scalar xx = gram(spec.stars[i].x, cfg);
    Scalar yy = gram(spec.stars[i].y, cfg);
    report.witnesses.push_back({"xx_" + std::to_string(i + 1), xx});
    report.witnesses.push_back({"yy_" + std::to_string(i + 1), yy});
    if (xx.is_zero() || yy.is_zero()) {
      report.offending_stars.push_back(i + 1);
      continue;
    }
    bbs_inv[i] = xx.inv();
    csc_inv[i] = yy.inv();
  }
  if (!report.offending_stars.empty()) {
    report.reason = "BB* or C*C is singular";
    return report;
  }

  const ExactMatrix b_dag = mats.b.adjoint() * ExactMatrix::diagonal(bbs_inv, cfg);
  const ExactMatrix c_dag = ExactMatrix::diagonal(csc_inv, cfg) * mats.c.adjoint();
  ExactMatrix out(n + leaves, n + leaves, cfg);
  out.set_block(0, n, c_dag);
  out.set_block(n, 0, b_dag);
  out.set_block(n, n, -(b_dag * spec.a * c_dag));
  report.exists = true;
  report.matrix = std::move(out);
  return report;
}

}  // namespace ginv
