#include "ginv/json_io.hpp"

#include "ginv/errors.hpp"

namespace ginv::io {

namespace {

std::vector<Scalar> vector_from_json(const Json& j, const char* name) {
  if (!j.is_array()) throw SpecViolation(name, "expected an array of scalars");
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(scalar_from_json(e));
  return out;
}

Json vector_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw SpecViolation(key, "missing key");
  }
  return j.at(key);
}

}  // namespace

Json field_to_json(FieldConfig cfg) {
  return Json{
      {"base", cfg.is_gaussian() ? "gaussian_rationals" : "rationals"},
      {"involution", cfg.involution() == Involution::Conjugation ? "conjugation"
                                                                 : "identity"}};
}

FieldConfig field_from_json(const Json& j) {
  if (!j.is_object()) throw SpecViolation("field", "expected an object");
  const std::string base = j.value("base", "rationals");
  const std::string inv = j.value("involution", "identity");
  Base b;
  if (base == "rationals") {
    b = Base::Rationals;
  } else if (base == "gaussian_rationals") {
    b = Base::GaussianRationals;
  } else {
    throw SpecViolation("field.base", "unknown base '" + base + "'");
  }
  Involution i;
  if (inv == "identity") {
    i = Involution::Identity;
  } else if (inv == "conjugation") {
    i = Involution::Conjugation;
  } else {
    throw SpecViolation("field.involution", "unknown involution '" + inv + "'");
  }
  return {b, i};
}

Json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError("scalar must be a string or an integer", 0);
}

Json matrix_to_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"field", field_to_json(m.cfg())},
              {"entries", std::move(entries)}};
}

ExactMatrix matrix_from_json(const Json& j, std::optional<FieldConfig> override_cfg) {
  const auto rows = require_key(j, "rows").get<std::size_t>();
  const auto cols = require_key(j, "cols").get<std::size_t>();
  FieldConfig cfg = j.contains("field") ? field_from_json(j.at("field")) : FieldConfig{};
  if (override_cfg) cfg = *override_cfg;
  const Json& entries = require_key(j, "entries");
  if (!entries.is_array() || entries.size() != rows) {
    throw SpecViolation("entries", "expected " + std::to_string(rows) + " rows");
  }
  std::vector<Scalar> flat;
  flat.reserve(rows * cols);
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols) {
      throw SpecViolation("entries", "expected rows of length " + std::to_string(cols));
    }
    for (const auto& e : row) flat.push_back(scalar_from_json(e));
  }
  try {
    return ExactMatrix(rows, cols, std::move(flat), cfg);
  } catch (const FieldMismatch& e) {
    throw SpecViolation("entries", e.what());
  }
}

Json polynomial_to_json(const Polynomial& p) { return vector_to_json(p.coeffs()); }

Polynomial polynomial_from_json(const Json& j) {
  return Polynomial(vector_from_json(j, "polynomial"));
}

Json double_star_to_json(const DoubleStarSpec& s) {
  return Json{{"a", to_string(s.a)},           {"b", to_string(s.b)},
              {"x", vector_to_json(s.x)},      {"y", vector_to_json(s.y)},
              {"z", vector_to_json(s.z)},      {"w", vector_to_json(s.w)},
              {"field", field_to_json(s.cfg)}};
}

DoubleStarSpec double_star_from_json(const Json& j,
                                     std::optional<FieldConfig> override_cfg) {
  DoubleStarSpec s;
  s.a = scalar_from_json(require_key(j, "a"));
  s.b = scalar_from_json(require_key(j, "b"));
  s.x = vector_from_json(require_key(j, "x"), "x");
  s.y = vector_from_json(require_key(j, "y"), "y");
  s.z = vector_from_json(require_key(j, "z"), "z");
  s.w = vector_from_json(require_key(j, "w"), "w");
  s.cfg = j.contains("field") ? field_from_json(j.at("field")) : FieldConfig{};
  if (override_cfg) s.cfg = *override_cfg;
  s.validate();
  return s;
}

Json d_linked_to_json(const DLinkedSpec& s) {
  Json stars = Json::array();
  for (const auto& star : s.stars) {
    stars.push_back(Json{{"x", vector_to_json(star.x)}, {"y", vector_to_json(star.y)}});
  }
  return Json{{"A", matrix_to_json(s.a)}, {"stars", std::move(stars)}};
}

DLinkedSpec d_linked_from_json(const Json& j, std::optional<FieldConfig> override_cfg) {
  if (!override_cfg && j.contains("field")) override_cfg = field_from_json(j.at("field"));
  DLinkedSpec s;
  s.a = matrix_from_json(require_key(j, "A"), override_cfg);
  const Json& stars = require_key(j, "stars");
  if (!stars.is_array()) throw SpecViolation("stars", "expected an array");
  for (const auto& star : stars) {
    s.stars.push_back({vector_from_json(require_key(star, "x"), "x"),
                       vector_from_json(require_key(star, "y"), "y")});
  }
  s.validate();
  return s;
}

bool is_d_linked_json(const Json& j) {
  return j.is_object() && j.contains("A") && j.contains("stars");
}

Json case_to_json(const DoubleStarCase& c) {
  Json out{{"case", to_string(c.tag)}, {"xy", to_string(c.xy)}, {"zw", to_string(c.zw)}};
  if (c.zeta) out["zeta"] = to_string(*c.zeta);
  return out;
}

Json report_to_json(const InverseReport& r) {
  Json out{{"kind", to_string(r.kind)}, {"exists", r.exists}};
  if (r.drazin) {
    out["index"] = r.drazin->index;
    out["min_poly"] = polynomial_to_json(r.drazin->min_poly);
  }
  out["matrix"] = r.matrix ? matrix_to_json(*r.matrix) : Json(nullptr);
  out["method"] = to_string(r.method);
  if (!r.witnesses.empty()) {
    Json w = Json::object();
    for (const auto& wit : r.witnesses) w[wit.name] = to_string(wit.value);
    out["witnesses"] = std::move(w);
  }
  if (!r.offending_stars.empty()) out["offending_stars"] = r.offending_stars;
  if (!r.reason.empty()) out["reason"] = r.reason;
  return out;
}

Json penrose_to_json(const PenroseFlags& f) {
  return Json{{"axa", f.axa},
              {"xax", f.xax},
              {"ax_selfadjoint", f.ax_selfadj},
              {"xa_selfadjoint", f.xa_selfadj}};
}

}  // namespace ginv::io
