#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ginv/closedform.hpp"
#include "ginv/graphs.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

// Seeded generator with platform-independent draws (the standard
// distributions are implementation-defined, the engine is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin(unsigned percent_true = 50) { return uniform(0, 99) < percent_true; }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<long>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

// Mixes a campaign seed with a case index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct RandomBounds {
  std::size_t max_m = 5;
  std::size_t max_n = 5;
  long magnitude = 10;  // |numerator|, denominator <= magnitude
  FieldConfig cfg{};
};

// Nonzero scalar; over Q(i) the imaginary part is nonzero half the time.
Scalar random_nonzero(Rng& rng, const RandomBounds& bounds);
Scalar random_scalar(Rng& rng, const RandomBounds& bounds);

// Generated spec classifies to `target`; dot-product constraints are forced
// by solving the last component of y (or w). Throws UnreachableCase when the
// bounds cannot host the target (zero dot products need length >= 2).
DoubleStarSpec random_double_star(Rng& rng, const RandomBounds& bounds,
                                  DoubleStarTag target);

enum class StarPairing {
  Mixed,    // each star zero-paired or not at random
  Nonzero,  // every x_i^T y_i != 0
  Zero,     // every x_i^T y_i = 0
};

struct DLinkedBounds {
  std::size_t max_centres = 3;
  std::size_t max_leaves = 3;
  long magnitude = 10;
  FieldConfig cfg{};
};

std::vector<Scalar> random_nonzero_vector(Rng& rng, std::size_t len,
                                          const RandomBounds& bounds);

DLinkedSpec random_d_linked(Rng& rng, const DLinkedBounds& bounds,
                            StarPairing pairing);
// Stars for a given base matrix.
DLinkedSpec random_d_linked_on(Rng& rng, ExactMatrix base,
                               const DLinkedBounds& bounds, StarPairing pairing);

// Direct sum of Jordan blocks of order n with Drazin index `index`
// (nilpotent block of that size plus blocks for small nonzero eigenvalues or
// shorter nilpotent blocks), conjugated by a random permutation.
ExactMatrix random_jordan_sum(Rng& rng, std::size_t n, std::size_t index,
                              FieldConfig cfg = {});

// Square matrix of order n with a mix of ranks and Drazin indices.
ExactMatrix random_square(Rng& rng, std::size_t n, const RandomBounds& bounds);
ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                          const RandomBounds& bounds, unsigned zero_percent = 0);
ExactMatrix random_permutation(Rng& rng, std::size_t n, FieldConfig cfg = {});

}  // namespace ginv
