#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ginv/closedform.hpp"
#include "ginv/geninv.hpp"
#include "ginv/graphs.hpp"
#include "ginv/matrix.hpp"
#include "ginv/polynomial.hpp"

namespace ginv::io {

using Json = nlohmann::ordered_json;

// Field block: {"base": "rationals" | "gaussian_rationals",
//               "involution": "identity" | "conjugation"}.
Json field_to_json(FieldConfig cfg);
FieldConfig field_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
// Accepts scalar strings and plain JSON integers.
Scalar scalar_from_json(const Json& j);

// {"rows": R, "cols": C, "field": {...}, "entries": [["1/2", ...], ...]}
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j,
                             std::optional<FieldConfig> override_cfg = {});

// Coefficients as scalar strings, constant term first.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json double_star_to_json(const DoubleStarSpec& s);
DoubleStarSpec double_star_from_json(const Json& j,
                                     std::optional<FieldConfig> override_cfg = {});

Json d_linked_to_json(const DLinkedSpec& s);
DLinkedSpec d_linked_from_json(const Json& j,
                               std::optional<FieldConfig> override_cfg = {});

// True when j looks like a D-linked spec ("A" and "stars" keys).
bool is_d_linked_json(const Json& j);

Json case_to_json(const DoubleStarCase& c);
Json report_to_json(const InverseReport& r);
Json penrose_to_json(const PenroseFlags& f);

}  // namespace ginv::io
