#include "ginv/campaign.hpp"

#include <sstream>

#include "ginv/errors.hpp"
#include "ginv/linalg.hpp"
#include "ginv/random_specs.hpp"

namespace ginv {

std::string to_string(Family f) {
  switch (f) {
    case Family::All: return "all";
    case Family::DoubleStar: return "double-star";
    case Family::DLinked: return "d-linked";
    case Family::General: return "general";
  }
  return "unknown";
}

Family family_from_string(const std::string& s) {
  if (s == "all") return Family::All;
  if (s == "double-star") return Family::DoubleStar;
  if (s == "d-linked") return Family::DLinked;
  if (s == "general") return Family::General;
  throw SpecViolation("family", "unknown family '" + s + "'");
}

namespace {

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(bool b) { return b ? "true" : "false"; }

class Checks {
 public:
  Checks(std::string family, io::Json input)
      : family_(std::move(family)), input_(std::move(input)) {}

  void expect(bool ok, const std::string& check, std::string expected = "",
              std::string got = "") {
    if (ok) return;
    CampaignFailure f;
    f.family = family_;
    f.check = check;
    f.input = input_;
    f.expected = std::move(expected);
    f.got = std::move(got);
    failures_.push_back(std::move(f));
  }

  template <class T>
  void equal(const T& expected, const T& got, const std::string& check) {
    if (expected == got) return;
    expect(false, check, str(expected), str(got));
  }

  std::vector<CampaignFailure> take() { return std::move(failures_); }

 private:
  std::string family_;
  io::Json input_;
  std::vector<CampaignFailure> failures_;
};

const std::vector<FieldConfig>& all_fields() {
  static const std::vector<FieldConfig> fields{
      FieldConfig::rationals(), FieldConfig::gaussian(Involution::Identity),
      FieldConfig::gaussian(Involution::Conjugation)};
  return fields;
}

void compare_reports(Checks& checks, const InverseReport& closed,
                     const InverseReport& general, const std::string& what) {
  checks.equal(general.exists, closed.exists, what + " existence");
  if (closed.exists && general.exists) {
    checks.equal(*general.matrix, *closed.matrix, what + " matrix");
  }
}

}  // namespace

std::vector<CampaignFailure> check_double_star_case(const DoubleStarSpec& spec,
                                                    DoubleStarTag expected) {
  Checks checks("double-star", io::double_star_to_json(spec));
  const auto cls = classify_double_star(spec);
  checks.equal(to_string(expected), to_string(cls.tag), "classification");

  const ExactMatrix m = build_double_star(spec);
  const DrazinResult closed = double_star_drazin(spec);
  const DrazinResult general = drazin_inverse(m);
  checks.equal(general.inverse, closed.inverse, "drazin matrix");
  checks.equal(general.index, closed.index, "drazin index");
  checks.equal(general.min_poly, closed.min_poly, "minimal polynomial");
  checks.expect(verify_drazin(m, closed.inverse, closed.index), "drazin equations");

  std::size_t table_index = 0;
  DoubleStarTag effective = cls.tag;
  if (cls.tag == DoubleStarTag::Mirrored) {
    effective = classify_double_star(swap_stars(spec).spec).tag;
  }
  switch (effective) {
    case DoubleStarTag::GroupInvertible: table_index = spec.order() == 4 ? 0 : 1; break;
    case DoubleStarTag::BothZero: table_index = 2; break;
    case DoubleStarTag::FirstNonzeroSecondZero: table_index = 3; break;
    case DoubleStarTag::NilpotentCase: table_index = 5; break;
    case DoubleStarTag::Mirrored: checks.expect(false, "swap stays mirrored"); break;
  }
  checks.equal(table_index, closed.index, "index table");

  if (cls.tag == DoubleStarTag::GroupInvertible) {
    compare_reports(checks, double_star_group(spec), group_inverse(m), "group");
  } else {
    checks.equal(general.min_poly, minimal_polynomial_prediction(spec),
                 "predicted minimal polynomial");
    checks.expect(!group_inverse(m).exists, "no group inverse outside the group case");
  }
  if (effective == DoubleStarTag::NilpotentCase) {
    const ExactMatrix m4 = m.pow(4);
    checks.expect(!m4.is_zero() && (m4 * m).is_zero(), "M^4 != 0 = M^5");
  }

  auto [mp, witness] = double_star_mp(spec);
  const InverseReport mp_general = moore_penrose(m);
  compare_reports(checks, mp, mp_general, "moore-penrose");
  checks.equal(witness.all_nonzero(), mp.exists, "moore-penrose witness");
  if (mp.exists) {
    checks.expect(verify_penrose(m, *mp.matrix).all(), "penrose equations");
  }

  auto swapped = swap_stars(spec);
  checks.equal(swapped.p * m * swapped.p.transpose(), build_double_star(swapped.spec),
               "swap similarity");
  return checks.take();
}

std::vector<CampaignFailure> check_d_linked_case(const DLinkedSpec& spec) {
  Checks checks("d-linked", io::d_linked_to_json(spec));
  const auto mats = build_d_linked(spec);
  const std::size_t n = spec.a.rows();

  checks.equal(n, rank(mats.b), "rank(B)");
  checks.equal(n, rank(mats.c), "rank(C)");
  std::vector<Scalar> pairings;
  bool all_zero = true;
  for (const auto& s : spec.stars) {
    pairings.push_back(dot(s.x, s.y));
    all_zero = all_zero && pairings.back().is_zero();
  }
  checks.equal(ExactMatrix::diagonal(pairings, spec.cfg()), mats.b * mats.c,
               "BC = diag(x_i^T y_i)");

  const InverseReport group = d_linked_group(spec);
  compare_reports(checks, group, group_inverse(mats.m), "group");
  if (group.exists) {
    checks.expect(verify_group(mats.m, *group.matrix), "group equations");
  }

  if (all_zero) {
    const DLinkedDrazin dz = d_linked_drazin(spec);
    checks.equal(dz.predicted_index, dz.result.index, "index = i(A) + 2");
    checks.expect(verify_drazin(mats.m, dz.result.inverse, dz.result.index),
                  "drazin equations");
  }

  const InverseReport mp = d_linked_mp(spec);
  compare_reports(checks, mp, moore_penrose(mats.m), "moore-penrose");
  if (mp.exists) {
    checks.expect(verify_penrose(mats.m, *mp.matrix).all(), "penrose equations");
  }
  return checks.take();
}

std::vector<CampaignFailure> check_general_case(const ExactMatrix& a,
                                                std::uint64_t seed) {
  Checks checks("general", io::matrix_to_json(a));
  Rng rng(seed ^ 0x5bd1e995ULL);
  const std::size_t n = a.rows();
  const RandomBounds bounds{0, 0, 3, a.cfg()};

  const DrazinResult d1 = drazin_inverse(a);
  const DrazinResult d2 = drazin_via_core_nilpotent(a);
  checks.equal(d1.inverse, d2.inverse, "drazin routes agree");
  checks.equal(d1.index, d2.index, "drazin index routes agree");
  checks.equal(d1.min_poly, d2.min_poly, "minimal polynomial routes agree");
  checks.expect(verify_drazin(a, d1.inverse, d1.index), "drazin equations");
  checks.equal(zero_multiplicity(d1.min_poly).k, d1.index, "index = zero multiplicity");

  const auto cn = core_nilpotent(a);
  checks.equal(a, cn.reassemble(), "core-nilpotent reassembly");

  const Polynomial delta = characteristic_polynomial(a);
  checks.expect(divmod(delta, d1.min_poly).second.is_zero(), "psi divides Delta",
                "0", str(divmod(delta, d1.min_poly).second));

  // (A^k)# exists exactly from the index on.
  if (d1.index == 0) {
    checks.expect(group_inverse(a).exists, "invertible A is group invertible");
  }
  ExactMatrix power = a;
  for (std::size_t i = 1; i <= d1.index; ++i) {
    checks.equal(i == d1.index, group_inverse(power).exists,
                 "(A^" + std::to_string(i) + ")# existence");
    power = power * a;
  }

  // Cline's formula on a square and a rectangular pair.
  const auto p = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
  const ExactMatrix left = random_matrix(rng, n, p, bounds, 30);
  const ExactMatrix right = random_matrix(rng, p, n, bounds, 30);
  const ExactMatrix partner = random_matrix(rng, n, n, bounds, 30);
  for (const auto& [x, y] : {std::pair{left, right}, std::pair{a, partner}}) {
    const DrazinResult xy = drazin_inverse(x * y);
    const DrazinResult yx = drazin_inverse(y * x);
    checks.equal(xy.inverse, cline_product_drazin(x, y), "Cline formula");
    const auto lambda = Polynomial::monomial(1);
    const bool ratio_ok = xy.min_poly == yx.min_poly ||
                          xy.min_poly == lambda * yx.min_poly ||
                          yx.min_poly == lambda * xy.min_poly;
    checks.expect(ratio_ok, "psi_AB / psi_BA in {1, lambda, 1/lambda}",
                  str(yx.min_poly), str(xy.min_poly));
    const long gap = static_cast<long>(xy.index) - static_cast<long>(yx.index);
    checks.expect(gap >= -1 && gap <= 1, "|i(AB) - i(BA)| <= 1");
  }

  // Similarity invariance.
  ExactMatrix l = ExactMatrix::identity(n, a.cfg());
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) l(r, c) = Scalar(rng.uniform(-2, 2));
  }
  checks.equal(d1.min_poly, minimal_polynomial(l * a * inverse(l)),
               "similarity invariance of psi");

  // Moore-Penrose and its transport under permutations.
  const InverseReport mp = moore_penrose(a);
  const ExactMatrix pp = random_permutation(rng, n, a.cfg());
  const ExactMatrix qq = random_permutation(rng, n, a.cfg());
  const InverseReport moved = moore_penrose(pp * a * qq.adjoint());
  checks.equal(mp.exists, moved.exists, "moore-penrose transport existence");
  if (mp.exists) {
    checks.expect(verify_penrose(a, *mp.matrix).all(), "penrose equations");
    if (moved.exists) {
      checks.equal(qq * *mp.matrix * pp.adjoint(), *moved.matrix,
                   "moore-penrose transport");
    }
  }
  return checks.take();
}

CampaignReport run_campaign(const CampaignOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  static const std::vector<DoubleStarTag> tags{
      DoubleStarTag::GroupInvertible, DoubleStarTag::BothZero,
      DoubleStarTag::FirstNonzeroSecondZero, DoubleStarTag::NilpotentCase,
      DoubleStarTag::Mirrored};

  CampaignReport report;
  for (std::size_t i = 0; i < opts.cases; ++i) {
    const std::uint64_t case_seed = derive_seed(opts.seed, i);
    Rng rng(case_seed);
    Family family = opts.family;
    if (family == Family::All) {
      family = static_cast<Family>(1 + i % 3);
    }
    const FieldConfig cfg = rng.pick(all_fields());
    std::vector<CampaignFailure> failures;
    try {
      switch (family) {
        case Family::DoubleStar: {
          const DoubleStarTag tag = tags[(i / 3) % tags.size()];
          const RandomBounds bounds{4, 4, 10, cfg};
          failures = check_double_star_case(random_double_star(rng, bounds, tag), tag);
          break;
        }
        case Family::DLinked: {
          const DLinkedBounds bounds{3, 3, 10, cfg};
          DLinkedSpec spec;
          if (rng.coin()) {
            spec = random_d_linked(rng, bounds, StarPairing::Mixed);
          } else {
            const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
            const auto index = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
            spec = random_d_linked_on(rng, random_jordan_sum(rng, n, index, cfg),
                                      bounds, StarPairing::Zero);
          }
          failures = check_d_linked_case(spec);
          break;
        }
        case Family::General:
        case Family::All: {
          const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
          const RandomBounds bounds{0, 0, 10, cfg};
          failures = check_general_case(random_square(rng, n, bounds), case_seed);
          break;
        }
      }
    } catch (const std::exception& e) {
      CampaignFailure f;
      f.family = to_string(family);
      f.check = "exception";
      f.got = e.what();
      failures.push_back(std::move(f));
    }
    for (auto& f : failures) {
      f.case_index = i;
      f.case_seed = case_seed;
      report.failures.push_back(std::move(f));
    }
    ++report.cases_run;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

io::Json campaign_to_json(const CampaignReport& r, const CampaignOptions& opts,
                          bool include_timing) {
  io::Json failures = io::Json::array();
  for (const auto& f : r.failures) {
    failures.push_back(io::Json{{"case_index", f.case_index},
                                {"seed", f.case_seed},
                                {"family", f.family},
                                {"check", f.check},
                                {"input", f.input},
                                {"expected", f.expected},
                                {"got", f.got}});
  }
  io::Json out{{"seed", opts.seed},
               {"family", to_string(opts.family)},
               {"cases_run", r.cases_run},
               {"failures", std::move(failures)}};
  if (include_timing) out["elapsed_ms"] = r.elapsed.count();
  return out;
}

}  // namespace ginv
