#include "ginv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ginv/campaign.hpp"
#include "ginv/closedform.hpp"
#include "ginv/errors.hpp"
#include "ginv/geninv.hpp"
#include "ginv/json_io.hpp"

namespace ginv::cli {

namespace {

using io::Json;

struct InputOptions {
  std::string spec_path;
  std::string matrix_path;
  std::string out_path;
  bool no_oracle = false;
};

// Parsed --spec / --matrix input.
struct Input {
  std::optional<DoubleStarSpec> double_star;
  std::optional<DLinkedSpec> d_linked;
  std::optional<ExactMatrix> matrix;

  ExactMatrix target() const {
    if (double_star) return build_double_star(*double_star);
    if (d_linked) return build_d_linked(*d_linked).m;
    return *matrix;
  }
};

class InputError : public Error {
 public:
  using Error::Error;
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::optional<FieldConfig> field_override() {
  const char* env = std::getenv("GINV_FIELD");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    return io::field_from_json(Json::parse(env));
  } catch (const Json::exception& e) {
    throw InputError(std::string("GINV_FIELD is not valid JSON: ") + e.what());
  }
}

Input load_input(const InputOptions& opts) {
  if (opts.spec_path.empty() == opts.matrix_path.empty()) {
    throw InputError("exactly one of --spec or --matrix is required");
  }
  const auto cfg = field_override();
  Input in;
  if (!opts.spec_path.empty()) {
    Json j = read_json(opts.spec_path);
    if (io::is_d_linked_json(j)) {
      in.d_linked = io::d_linked_from_json(j, cfg);
    } else {
      in.double_star = io::double_star_from_json(j, cfg);
    }
  } else {
    in.matrix = io::matrix_from_json(read_json(opts.matrix_path), cfg);
  }
  return in;
}

void emit(const Json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw InputError("cannot write '" + out_path + "'");
  file << j.dump(2) << '\n';
}

bool reports_agree(const InverseReport& a, const InverseReport& b) {
  if (a.exists != b.exists) return false;
  if (a.exists && *a.matrix != *b.matrix) return false;
  if (a.drazin && b.drazin && a.drazin->index != b.drazin->index) return false;
  return true;
}

// Primary report at the top level, oracle report nested beside it.
int finish_report(const InverseReport& primary, const std::optional<InverseReport>& oracle,
                  bool check_oracle, Json extra, const InputOptions& opts,
                  std::ostream& out) {
  Json j = io::report_to_json(primary);
  for (auto& [k, v] : extra.items()) j[k] = v;
  bool agreement = true;
  if (oracle) {
    j["oracle"] = io::report_to_json(*oracle);
    agreement = reports_agree(primary, *oracle);
  }
  if (extra.contains("index_matches") && !extra["index_matches"].get<bool>()) {
    agreement = false;
  }
  if (check_oracle) {
    j["agreement"] = agreement;
  } else {
    j["agreement"] = nullptr;
  }
  emit(j, opts.out_path, out);
  if (!agreement) return kDisagreement;
  return primary.exists ? kOk : kNotExists;
}

int cmd_build(const InputOptions& opts, std::ostream& out) {
  emit(io::matrix_to_json(load_input(opts).target()), opts.out_path, out);
  return kOk;
}

int cmd_classify(const InputOptions& opts, std::ostream& out) {
  Input in = load_input(opts);
  if (in.double_star) {
    emit(io::case_to_json(classify_double_star(*in.double_star)), opts.out_path, out);
    return kOk;
  }
  if (in.d_linked) {
    Json pairings = Json::array();
    bool all_nonzero = true;
    bool all_zero = true;
    for (const auto& s : in.d_linked->stars) {
      Scalar d = dot(s.x, s.y);
      pairings.push_back(to_string(d));
      all_nonzero = all_nonzero && !d.is_zero();
      all_zero = all_zero && d.is_zero();
    }
    emit(Json{{"case", all_nonzero ? "group_invertible"
                                   : (all_zero ? "zero_pairing" : "mixed")},
              {"xy", std::move(pairings)}},
         opts.out_path, out);
    return kOk;
  }
  throw InputError("classify needs --spec");
}

int cmd_group(const InputOptions& opts, std::ostream& out) {
  Input in = load_input(opts);
  const bool oracle = !opts.no_oracle;
  if (in.double_star) {
    const auto cls = classify_double_star(*in.double_star);
    InverseReport closed;
    if (cls.tag == DoubleStarTag::GroupInvertible) {
      closed = double_star_group(*in.double_star);
    } else {
      closed.kind = InverseKind::Group;
      closed.method = Method::ClosedForm;
      closed.witnesses = {{"xy", cls.xy}, {"zw", cls.zw}};
      closed.reason = "x^T y = 0 or z^T w = 0";
    }
    std::optional<InverseReport> general;
    if (oracle) general = group_inverse(in.target());
    return finish_report(closed, general, oracle, Json::object(), opts, out);
  }
  if (in.d_linked) {
    std::optional<InverseReport> general;
    if (oracle) general = group_inverse(in.target());
    return finish_report(d_linked_group(*in.d_linked), general, oracle,
                         Json::object(), opts, out);
  }
  return finish_report(group_inverse(*in.matrix), std::nullopt, false,
                       Json::object(), opts, out);
}

int cmd_drazin(const InputOptions& opts, std::ostream& out) {
  Input in = load_input(opts);
  const bool oracle = !opts.no_oracle;
  const ExactMatrix m = in.target();
  std::optional<InverseReport> check;
  if (in.double_star) {
    if (oracle) check = drazin_report(drazin_inverse(m), Method::General);
    return finish_report(drazin_report(double_star_drazin(*in.double_star),
                                       Method::ClosedForm),
                         check, oracle, Json::object(), opts, out);
  }
  if (oracle) check = drazin_report(drazin_via_core_nilpotent(m), Method::General);
  if (in.d_linked) {
    bool all_zero = true;
    for (const auto& s : in.d_linked->stars) all_zero = all_zero && dot(s.x, s.y).is_zero();
    if (all_zero) {
      DLinkedDrazin dz = d_linked_drazin(*in.d_linked);
      Json extra{{"predicted_index", dz.predicted_index},
                 {"index_matches", dz.index_matches()}};
      return finish_report(drazin_report(std::move(dz.result), Method::General),
                           check, oracle, std::move(extra), opts, out);
    }
  }
  return finish_report(drazin_report(drazin_inverse(m), Method::General), check,
                       oracle, Json::object(), opts, out);
}

int cmd_mp(const InputOptions& opts, std::ostream& out) {
  Input in = load_input(opts);
  const bool oracle = !opts.no_oracle;
  std::optional<InverseReport> general;
  if (in.double_star) {
    if (oracle) general = moore_penrose(in.target());
    return finish_report(double_star_mp(*in.double_star).first, general, oracle,
                         Json::object(), opts, out);
  }
  if (in.d_linked) {
    if (oracle) general = moore_penrose(in.target());
    return finish_report(d_linked_mp(*in.d_linked), general, oracle,
                         Json::object(), opts, out);
  }
  return finish_report(moore_penrose(*in.matrix), std::nullopt, false,
                       Json::object(), opts, out);
}

struct VerifyOptions {
  std::string matrix_path;
  std::string candidate_path;
  std::string kind;
  std::optional<std::size_t> index;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  const auto cfg = field_override();
  const ExactMatrix a = io::matrix_from_json(read_json(opts.matrix_path), cfg);
  const ExactMatrix x = io::matrix_from_json(read_json(opts.candidate_path), cfg);
  Json j{{"kind", opts.kind}};
  bool valid = false;
  if (opts.kind == "mp") {
    const PenroseFlags flags = verify_penrose(a, x);
    valid = flags.all();
    j["equations"] = io::penrose_to_json(flags);
  } else if (opts.kind == "group") {
    valid = verify_group(a, x);
  } else {
    // Any exponent at or above the index works; the order of A always is.
    const std::size_t k = opts.index.value_or(a.rows());
    valid = verify_drazin(a, x, k);
    j["index"] = k;
  }
  j["valid"] = valid;
  out << j.dump(2) << '\n';
  return valid ? kOk : kNotExists;
}

int cmd_proptest(const CampaignOptions& opts, bool timing, std::ostream& out,
                 std::ostream& err) {
  const CampaignReport report = run_campaign(opts);
  out << campaign_to_json(report, opts, timing).dump(2) << '\n';
  if (!timing) {
    err << "proptest: " << report.cases_run << " cases, "
        << report.failures.size() << " failures, " << report.elapsed.count()
        << " ms\n";
  }
  return report.passed() ? kOk : kDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact group, Drazin and Moore-Penrose inverses", "ginv"};
  app.require_subcommand(1);

  InputOptions input;
  std::vector<std::pair<std::string, CLI::App*>> input_cmds;
  const std::vector<std::pair<const char*, const char*>> input_names = {
      {"build", "print the matrix of a spec"},
      {"classify", "report which closed-form case applies"},
      {"group", "group inverse"},
      {"drazin", "Drazin inverse, index and minimal polynomial"},
      {"mp", "Moore-Penrose inverse"}};
  for (const auto& [name, help] : input_names) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--spec", input.spec_path, "double star or D-linked spec JSON");
    sub->add_option("--matrix", input.matrix_path, "matrix JSON");
    sub->add_option("--out", input.out_path, "write the JSON report here");
    sub->add_flag("--no-oracle", input.no_oracle, "skip the general-algorithm cross-check");
    input_cmds.emplace_back(name, sub);
  }

  VerifyOptions verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a candidate inverse");
  verify_cmd->add_option("--matrix", verify.matrix_path)->required();
  verify_cmd->add_option("--candidate", verify.candidate_path)->required();
  verify_cmd->add_option("--kind", verify.kind)
      ->required()
      ->check(CLI::IsMember({"group", "drazin", "mp"}));
  verify_cmd->add_option("--index", verify.index);

  CampaignOptions campaign;
  std::string family = "all";
  bool timing = false;
  CLI::App* proptest = app.add_subcommand("proptest", "randomized cross-validation");
  proptest->add_option("--cases", campaign.cases)->default_val(100);
  proptest->add_option("--seed", campaign.seed)->default_val(0);
  proptest->add_option("--family", family)
      ->check(CLI::IsMember({"all", "double-star", "d-linked", "general"}));
  proptest->add_flag("--timing", timing, "include elapsed time in the report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    for (const auto& [name, sub] : input_cmds) {
      if (!sub->parsed()) continue;
      if (name == "build") return cmd_build(input, out);
      if (name == "classify") return cmd_classify(input, out);
      if (name == "group") return cmd_group(input, out);
      if (name == "drazin") return cmd_drazin(input, out);
      if (name == "mp") return cmd_mp(input, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (proptest->parsed()) {
      campaign.family = family_from_string(family);
      return cmd_proptest(campaign, timing, out, err);
    }
  } catch (const Error& e) {
    err << "ginv: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    err << "ginv: malformed input: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ginv::cli
