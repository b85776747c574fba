#include "ginv/graphs.hpp"

#include <algorithm>
#include <string>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

void require_strictly_nonzero(const std::vector<Scalar>& v,
                              const std::string& name, FieldConfig cfg) {
  if (v.empty()) throw SpecViolation(name, "vector must be non-empty");
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) {
      throw SpecViolation(name, "component " + std::to_string(i) + " is zero");
    }
    if (!cfg.is_gaussian() && !v[i].is_real()) {
      throw SpecViolation(name, "component " + std::to_string(i) +
                                    " is not rational");
    }
  }
}

}  // namespace

Scalar dot(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  if (u.size() != v.size()) throw DimensionMismatch("dot: length mismatch");
  Scalar acc;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

Scalar gram(const std::vector<Scalar>& u, FieldConfig cfg) {
  Scalar acc;
  for (const auto& e : u) acc += e * involute(e, cfg);
  return acc;
}

void DoubleStarSpec::validate() const {
  if (a.is_zero()) throw SpecViolation("a", "must be nonzero");
  if (b.is_zero()) throw SpecViolation("b", "must be nonzero");
  if (!cfg.is_gaussian() && !(a.is_real() && b.is_real())) {
    throw SpecViolation(a.is_real() ? "b" : "a", "is not rational");
  }
  require_strictly_nonzero(x, "x", cfg);
  require_strictly_nonzero(y, "y", cfg);
  require_strictly_nonzero(z, "z", cfg);
  require_strictly_nonzero(w, "w", cfg);
  if (x.size() != y.size()) throw SpecViolation("y", "length differs from x");
  if (z.size() != w.size()) throw SpecViolation("w", "length differs from z");
}

std::size_t DLinkedSpec::leaf_count() const {
  std::size_t total = 0;
  for (const auto& s : stars) total += s.x.size();
  return total;
}

void DLinkedSpec::validate() const {
  if (!a.is_square()) throw SpecViolation("A", "must be square");
  if (stars.size() != a.rows()) {
    throw SpecViolation("stars", "need one star per row of A (" +
                                     std::to_string(a.rows()) + "), got " +
                                     std::to_string(stars.size()));
  }
  for (std::size_t i = 0; i < stars.size(); ++i) {
    const std::string tag = "stars[" + std::to_string(i) + "]";
    require_strictly_nonzero(stars[i].x, tag + ".x", cfg());
    require_strictly_nonzero(stars[i].y, tag + ".y", cfg());
    if (stars[i].x.size() != stars[i].y.size()) {
      throw SpecViolation(tag + ".y", "length differs from x");
    }
  }
}

ExactMatrix build_double_star(const DoubleStarSpec& spec) {
  spec.validate();
  const std::size_t m = spec.m();
  const std::size_t c2 = m + 1;  // index of the second centre
  ExactMatrix out(spec.order(), spec.order(), spec.cfg);
  out(0, c2) = spec.a;
  out(c2, 0) = spec.b;
  for (std::size_t i = 0; i < m; ++i) {
    out(0, 1 + i) = spec.x[i];
    out(1 + i, 0) = spec.y[i];
  }
  for (std::size_t i = 0; i < spec.n(); ++i) {
    out(c2, c2 + 1 + i) = spec.z[i];
    out(c2 + 1 + i, c2) = spec.w[i];
  }
  return out;
}

DLinkedMatrices build_d_linked(const DLinkedSpec& spec) {
  spec.validate();
  const std::size_t n = spec.a.rows();
  const std::size_t leaves = spec.leaf_count();
  ExactMatrix b(n, leaves, spec.cfg());
  ExactMatrix c(leaves, n, spec.cfg());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& star = spec.stars[i];
    for (std::size_t j = 0; j < star.x.size(); ++j) {
      b(i, offset + j) = star.x[j];
      c(offset + j, i) = star.y[j];
    }
    offset += star.x.size();
  }
  ExactMatrix m(n + leaves, n + leaves, spec.cfg());
  m.set_block(0, 0, spec.a);
  m.set_block(0, n, b);
  m.set_block(n, 0, c);
  return {std::move(m), std::move(b), std::move(c)};
}

Digraph digraph_of(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("digraph_of: non-square matrix");
  Digraph g;
  g.vertex_count = a.rows();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) g.edges.push_back({i, j, a(i, j)});
    }
  }
  return g;
}

std::size_t Digraph::out_degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [v](const Edge& e) { return e.from == v; }));
}

std::size_t Digraph::in_degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [v](const Edge& e) { return e.to == v; }));
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return e.from == from && e.to == to;
  });
}

SwappedStars swap_stars(const DoubleStarSpec& spec) {
  DoubleStarSpec swapped{spec.b, spec.a, spec.z, spec.w, spec.x, spec.y, spec.cfg};
  const std::size_t m = spec.m();
  const std::size_t n = spec.n();
  const std::size_t order = spec.order();
  // Row i of P selects the old vertex that lands at new position i.
  ExactMatrix p(order, order, spec.cfg);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t old = i <= n ? m + 1 + i : i - n - 1;
    p(i, old) = Scalar(1);
  }
  return {std::move(swapped), std::move(p)};
}

}  // namespace ginv
