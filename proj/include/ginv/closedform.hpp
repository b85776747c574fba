#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "ginv/geninv.hpp"
#include "ginv/graphs.hpp"

namespace ginv {

// Partition of double star specs by the dot products x^T y and z^T w.
// NilpotentCase is tested before FirstNonzeroSecondZero (zeta = 0).
enum class DoubleStarTag {
  GroupInvertible,         // x^T y != 0, z^T w != 0
  BothZero,                // x^T y = 0,  z^T w = 0
  FirstNonzeroSecondZero,  // x^T y != 0, z^T w = 0, x^T y + ab != 0
  NilpotentCase,           // x^T y = -ab, z^T w = 0
  Mirrored,                // x^T y = 0,  z^T w != 0
};

std::string to_string(DoubleStarTag tag);

struct DoubleStarCase {
  DoubleStarTag tag = DoubleStarTag::GroupInvertible;
  Scalar xy;
  Scalar zw;
  std::optional<Scalar> zeta;  // x^T y + ab, set when z^T w = 0 != x^T y
};

DoubleStarCase classify_double_star(const DoubleStarSpec& spec);

// Group inverse through the explicit 4x4 GF of the four-column full rank
// factorization. Throws WrongCase unless the spec is GroupInvertible.
InverseReport double_star_group(const DoubleStarSpec& spec);

// Closed-form Drazin inverse for every case; the mirrored case is
// conjugated through swap_stars.
DrazinResult double_star_drazin(const DoubleStarSpec& spec);

// Predicted minimal polynomial for the singular, non group-invertible cases.
// Throws WrongCase for GroupInvertible specs.
Polynomial minimal_polynomial_prediction(const DoubleStarSpec& spec);

struct MPWitness {
  Scalar s;  // sum x_i conj(x_i)
  Scalar u;  // sum y_i conj(y_i)
  Scalar t;  // sum z_i conj(z_i)
  Scalar v;  // sum w_i conj(w_i)

  bool all_nonzero() const {
    return !s.is_zero() && !u.is_zero() && !t.is_zero() && !v.is_zero();
  }
};

std::pair<InverseReport, MPWitness> double_star_mp(const DoubleStarSpec& spec);

// M# = [[0, (BC)^-1 B], [C (BC)^-1, -C (BC)^-1 A (BC)^-1 B]], existing iff
// every x_i^T y_i is nonzero.
InverseReport d_linked_group(const DLinkedSpec& spec);

struct DLinkedDrazin {
  DrazinResult result;
  std::size_t predicted_index = 0;  // i(A) + 2

  bool index_matches() const { return result.index == predicted_index; }
};

// Requires x_i^T y_i = 0 for every star (throws HypothesisViolated). The
// inverse itself comes from the general algorithm; the index prediction is
// the checked claim.
DLinkedDrazin d_linked_drazin(const DLinkedSpec& spec);

// M+ = [[0, (C*C)^-1 C*], [B*(BB*)^-1, -B*(BB*)^-1 A (C*C)^-1 C*]], existing
// iff every x_i^T conj(x_i) and conj(y_i)^T y_i is nonzero.
InverseReport d_linked_mp(const DLinkedSpec& spec);

}  // namespace ginv
