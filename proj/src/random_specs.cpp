#include "ginv/random_specs.hpp"

#include <algorithm>
#include <string>

#include "ginv/errors.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased and engine-defined.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

mpq_class random_rational(Rng& rng, long magnitude, bool allow_zero) {
  long num;
  do {
    num = rng.uniform(-magnitude, magnitude);
  } while (!allow_zero && num == 0);
  // Mostly integers; fractions appear often enough to exercise canonical form.
  long den = rng.coin(30) ? rng.uniform(1, magnitude) : 1;
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::size_t random_length(Rng& rng, std::size_t lo, std::size_t hi,
                          const char* what) {
  if (hi < lo) {
    throw UnreachableCase(std::string(what) + " needs length >= " +
                          std::to_string(lo) + " but the bound is " +
                          std::to_string(hi));
  }
  return static_cast<std::size_t>(
      rng.uniform(static_cast<long>(lo), static_cast<long>(hi)));
}

// Fills v (length >= 1) with nonzero entries such that u^T v = target.
// Returns false when the solved last entry came out zero.
bool solve_last(Rng& rng, const std::vector<Scalar>& u, const Scalar& target,
                std::vector<Scalar>& v, const RandomBounds& bounds) {
  const std::size_t len = u.size();
  v = random_nonzero_vector(rng, len - 1, bounds);
  Scalar partial;
  for (std::size_t i = 0; i + 1 < len; ++i) partial += u[i] * v[i];
  Scalar last = (target - partial) / u.back();
  if (last.is_zero()) return false;
  v.push_back(std::move(last));
  return true;
}

// Random v with u^T v nonzero and different from every value in `avoid`.
void random_avoiding(Rng& rng, const std::vector<Scalar>& u,
                     const std::vector<Scalar>& avoid, std::vector<Scalar>& v,
                     const RandomBounds& bounds) {
  for (;;) {
    v = random_nonzero_vector(rng, u.size(), bounds);
    Scalar d = dot(u, v);
    if (d.is_zero()) continue;
    if (std::find(avoid.begin(), avoid.end(), d) != avoid.end()) continue;
    return;
  }
}

void zero_pairing(Rng& rng, const std::vector<Scalar>& u,
                  std::vector<Scalar>& v, const RandomBounds& bounds) {
  while (!solve_last(rng, u, Scalar(), v, bounds)) {
  }
}

}  // namespace

Scalar random_scalar(Rng& rng, const RandomBounds& bounds) {
  if (bounds.cfg.is_gaussian() && rng.coin()) {
    return Scalar(random_rational(rng, bounds.magnitude, true),
                  random_rational(rng, bounds.magnitude, false));
  }
  return Scalar(random_rational(rng, bounds.magnitude, true));
}

Scalar random_nonzero(Rng& rng, const RandomBounds& bounds) {
  if (bounds.cfg.is_gaussian() && rng.coin()) {
    return Scalar(random_rational(rng, bounds.magnitude, true),
                  random_rational(rng, bounds.magnitude, false));
  }
  return Scalar(random_rational(rng, bounds.magnitude, false));
}

std::vector<Scalar> random_nonzero_vector(Rng& rng, std::size_t len,
                                          const RandomBounds& bounds) {
  std::vector<Scalar> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(random_nonzero(rng, bounds));
  return v;
}

DoubleStarSpec random_double_star(Rng& rng, const RandomBounds& bounds,
                                  DoubleStarTag target) {
  using Tag = DoubleStarTag;
  const bool xy_zero = target == Tag::BothZero || target == Tag::Mirrored;
  const bool zw_zero = target == Tag::BothZero ||
                       target == Tag::FirstNonzeroSecondZero ||
                       target == Tag::NilpotentCase;
  const std::size_t min_m = xy_zero ? 2 : 1;
  const std::size_t min_n = zw_zero ? 2 : 1;
  const std::size_t m = random_length(rng, min_m, bounds.max_m, "x");
  const std::size_t n = random_length(rng, min_n, bounds.max_n, "z");

  DoubleStarSpec s;
  s.cfg = bounds.cfg;
  for (;;) {
    s.a = random_nonzero(rng, bounds);
    s.b = random_nonzero(rng, bounds);
    const Scalar minus_ab = -(s.a * s.b);
    s.x = random_nonzero_vector(rng, m, bounds);
    s.z = random_nonzero_vector(rng, n, bounds);

    bool ok = true;
    switch (target) {
      case Tag::GroupInvertible:
        random_avoiding(rng, s.x, {}, s.y, bounds);
        random_avoiding(rng, s.z, {}, s.w, bounds);
        break;
      case Tag::BothZero:
        ok = solve_last(rng, s.x, Scalar(), s.y, bounds) &&
             solve_last(rng, s.z, Scalar(), s.w, bounds);
        break;
      case Tag::FirstNonzeroSecondZero:
        random_avoiding(rng, s.x, {minus_ab}, s.y, bounds);
        ok = solve_last(rng, s.z, Scalar(), s.w, bounds);
        break;
      case Tag::NilpotentCase:
        ok = solve_last(rng, s.x, minus_ab, s.y, bounds) &&
             solve_last(rng, s.z, Scalar(), s.w, bounds);
        break;
      case Tag::Mirrored:
        ok = solve_last(rng, s.x, Scalar(), s.y, bounds);
        // After swapping stars this lands in either of the two z^T w = 0 cases.
        if (ok && rng.coin()) {
          ok = solve_last(rng, s.z, minus_ab, s.w, bounds);
        } else if (ok) {
          random_avoiding(rng, s.z, {minus_ab}, s.w, bounds);
        }
        break;
    }
    if (ok && classify_double_star(s).tag == target) return s;
  }
}

DLinkedSpec random_d_linked_on(Rng& rng, ExactMatrix base,
                               const DLinkedBounds& bounds, StarPairing pairing) {
  const RandomBounds rb{0, 0, bounds.magnitude, bounds.cfg};
  DLinkedSpec spec;
  spec.a = base.with_cfg(bounds.cfg);
  for (std::size_t i = 0; i < spec.a.rows(); ++i) {
    bool zero = pairing == StarPairing::Zero ||
                (pairing == StarPairing::Mixed && bounds.max_leaves >= 2 && rng.coin());
    const std::size_t r = random_length(rng, zero ? 2 : 1, bounds.max_leaves, "star");
    Star star;
    star.x = random_nonzero_vector(rng, r, rb);
    if (zero) {
      zero_pairing(rng, star.x, star.y, rb);
    } else {
      random_avoiding(rng, star.x, {}, star.y, rb);
    }
    spec.stars.push_back(std::move(star));
  }
  return spec;
}

DLinkedSpec random_d_linked(Rng& rng, const DLinkedBounds& bounds,
                            StarPairing pairing) {
  const std::size_t n = random_length(rng, 1, bounds.max_centres, "base");
  const RandomBounds rb{0, 0, bounds.magnitude, bounds.cfg};
  return random_d_linked_on(rng, random_matrix(rng, n, n, rb, 50), bounds, pairing);
}

ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                          const RandomBounds& bounds, unsigned zero_percent) {
  ExactMatrix out(rows, cols, bounds.cfg);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (zero_percent > 0 && rng.coin(zero_percent)) continue;
      out(r, c) = random_scalar(rng, bounds);
    }
  }
  return out;
}

ExactMatrix random_permutation(Rng& rng, std::size_t n, FieldConfig cfg) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1));
    std::swap(perm[i - 1], perm[j]);
  }
  ExactMatrix p(n, n, cfg);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = Scalar(1);
  return p;
}

ExactMatrix random_jordan_sum(Rng& rng, std::size_t n, std::size_t index,
                              FieldConfig cfg) {
  if (index > n || n == 0) {
    throw UnreachableCase("Jordan sum of order " + std::to_string(n) +
                          " cannot have index " + std::to_string(index));
  }
  ExactMatrix j(n, n, cfg);
  std::size_t pos = 0;
  auto put_block = [&](std::size_t size, const Scalar& eigenvalue) {
    for (std::size_t i = 0; i < size; ++i) {
      j(pos + i, pos + i) = eigenvalue;
      if (i + 1 < size) j(pos + i, pos + i + 1) = Scalar(1);
    }
    pos += size;
  };
  put_block(index, Scalar());
  while (pos < n) {
    const std::size_t room = n - pos;
    if (index > 0 && rng.coin(40)) {
      put_block(random_length(rng, 1, std::min(index, room), "block"), Scalar());
    } else {
      long ev;
      do {
        ev = rng.uniform(-3, 3);
      } while (ev == 0);
      put_block(random_length(rng, 1, std::min<std::size_t>(2, room), "block"),
                Scalar(ev));
    }
  }
  ExactMatrix p = random_permutation(rng, n, cfg);
  return p * j * p.transpose();
}

ExactMatrix random_square(Rng& rng, std::size_t n, const RandomBounds& bounds) {
  RandomBounds small = bounds;
  small.magnitude = std::min<long>(bounds.magnitude, 3);
  switch (rng.uniform(0, 2)) {
    case 0: {
      // Low-rank product.
      auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
      return random_matrix(rng, n, r, small) * random_matrix(rng, r, n, small);
    }
    case 1: {
      // Jordan sum hidden by a unit lower-triangular similarity.
      auto index = static_cast<std::size_t>(rng.uniform(0, std::min<long>(3, static_cast<long>(n))));
      ExactMatrix j = random_jordan_sum(rng, n, index, bounds.cfg);
      ExactMatrix l = ExactMatrix::identity(n, bounds.cfg);
      for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t c = 0; c < r; ++c) {
          if (rng.coin(50)) l(r, c) = Scalar(rng.uniform(-2, 2));
        }
      }
      return l * j * inverse(l);
    }
    default:
      return random_matrix(rng, n, n, bounds, 60);
  }
}

}  // namespace ginv
