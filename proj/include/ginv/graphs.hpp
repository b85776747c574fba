#pragma once

#include <cstddef>
#include <vector>

#include "ginv/field.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

// Double star digraph matrix, vertex order: centre 1, its m leaves,
// centre 2, its n leaves.
//
//   [ 0  x^T  a  0  ]
//   [ y  0    0  0  ]
//   [ b  0    0  z^T]
//   [ 0  0    w  0  ]
struct DoubleStarSpec {
  Scalar a;
  Scalar b;
  std::vector<Scalar> x;
  std::vector<Scalar> y;
  std::vector<Scalar> z;
  std::vector<Scalar> w;
  FieldConfig cfg;

  std::size_t m() const { return x.size(); }
  std::size_t n() const { return z.size(); }
  std::size_t order() const { return m() + n() + 2; }

  // Throws SpecViolation naming the offending field.
  void validate() const;

  friend bool operator==(const DoubleStarSpec&, const DoubleStarSpec&) = default;
};

struct Star {
  std::vector<Scalar> x;
  std::vector<Scalar> y;

  friend bool operator==(const Star&, const Star&) = default;
};

// Stars K_{1,r_i} whose centres are wired by the n x n matrix a:
// M = [[A, B], [C, 0]] with B = diag(x_1^T, ..., x_n^T) and
// C = diag(y_1, ..., y_n).
struct DLinkedSpec {
  ExactMatrix a;
  std::vector<Star> stars;

  FieldConfig cfg() const { return a.cfg(); }
  std::size_t leaf_count() const;
  void validate() const;

  friend bool operator==(const DLinkedSpec&, const DLinkedSpec&) = default;
};

struct DLinkedMatrices {
  ExactMatrix m;
  ExactMatrix b;
  ExactMatrix c;
};

struct Edge {
  std::size_t from;
  std::size_t to;
  Scalar weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Digraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;  // row-major order of the source matrix

  std::size_t out_degree(std::size_t v) const;
  std::size_t in_degree(std::size_t v) const;
  bool has_edge(std::size_t from, std::size_t to) const;
};

ExactMatrix build_double_star(const DoubleStarSpec& spec);
DLinkedMatrices build_d_linked(const DLinkedSpec& spec);
Digraph digraph_of(const ExactMatrix& a);

struct SwappedStars {
  DoubleStarSpec spec;
  // build_double_star(spec) = p * M * p^T for the original M.
  ExactMatrix p;
};

// Exchanges the two stars: (a, b, x, y, z, w) -> (b, a, z, w, x, y).
SwappedStars swap_stars(const DoubleStarSpec& spec);

// x^T y without involution.
Scalar dot(const std::vector<Scalar>& u, const std::vector<Scalar>& v);
// sum u_i * involute(u_i)
Scalar gram(const std::vector<Scalar>& u, FieldConfig cfg);

}  // namespace ginv
