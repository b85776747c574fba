#include "ginv/matrix.hpp"

#include <ostream>
#include <string>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

void check_entry(const Scalar& s, FieldConfig cfg) {
  if (!cfg.is_gaussian() && !s.is_real()) {
    throw FieldMismatch("entry " + to_string(s) +
                        " is not a rational but the field is Q");
  }
}

std::string shape(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, FieldConfig cfg)
    : rows_(rows), cols_(cols), cfg_(cfg), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols,
                         std::vector<Scalar> entries, FieldConfig cfg)
    : rows_(rows), cols_(cols), cfg_(cfg), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                            " does not match shape " + shape(*this));
  }
  for (const auto& e : entries_) check_entry(e, cfg_);
}

ExactMatrix::ExactMatrix(
    std::initializer_list<std::initializer_list<Scalar>> rows, FieldConfig cfg)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0),
      cfg_(cfg) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (const auto& e : r) {
      check_entry(e, cfg_);
      entries_.push_back(e);
    }
  }
}

ExactMatrix ExactMatrix::zero(std::size_t rows, std::size_t cols,
                              FieldConfig cfg) {
  return ExactMatrix(rows, cols, cfg);
}

ExactMatrix ExactMatrix::identity(std::size_t n, FieldConfig cfg) {
  ExactMatrix m(n, n, cfg);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const Scalar> diag,
                                  FieldConfig cfg) {
  ExactMatrix m(diag.size(), diag.size(), cfg);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    check_entry(diag[i], cfg);
    m(i, i) = diag[i];
  }
  return m;
}

ExactMatrix ExactMatrix::column(std::span<const Scalar> v, FieldConfig cfg) {
  return ExactMatrix(v.size(), 1, std::vector<Scalar>(v.begin(), v.end()), cfg);
}

ExactMatrix ExactMatrix::row(std::span<const Scalar> v, FieldConfig cfg) {
  return ExactMatrix(1, v.size(), std::vector<Scalar>(v.begin(), v.end()), cfg);
}

bool ExactMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " +
                            shape(b));
  }
}

void require_same_field(const ExactMatrix& a, const ExactMatrix& b,
                        const char* op) {
  if (a.cfg() != b.cfg()) {
    throw FieldMismatch(std::string(op) + ": " + to_string(a.cfg()) + " vs " +
                        to_string(b.cfg()));
  }
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "add");
  require_same_field(*this, rhs, "add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "sub");
  require_same_field(*this, rhs, "sub");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const Scalar& s) {
  check_entry(s, cfg_);
  for (auto& e : entries_) e *= s;
  return *this;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mul: " + shape(a) + " * " + shape(b));
  }
  require_same_field(a, b, "mul");
  ExactMatrix out(a.rows(), b.cols(), a.cfg());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_, cfg_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_, cfg_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = involute((*this)(r, c), cfg_);
    }
  }
  return out;
}

ExactMatrix ExactMatrix::involuted() const {
  ExactMatrix out = *this;
  for (auto& e : out.entries_) e = involute(e, cfg_);
  return out;
}

ExactMatrix ExactMatrix::pow(std::size_t k) const {
  if (!is_square()) throw DimensionMismatch("pow: non-square " + shape(*this));
  ExactMatrix result = identity(rows_, cfg_);
  ExactMatrix base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionMismatch("block out of range of " + shape(*this));
  }
  ExactMatrix out(nr, nc, cfg_);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0,
                            const ExactMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw DimensionMismatch("set_block: " + shape(b) + " does not fit in " +
                            shape(*this));
  }
  require_same_field(*this, b, "set_block");
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

ExactMatrix ExactMatrix::with_cfg(FieldConfig cfg) const {
  return ExactMatrix(rows_, cols_, entries_, cfg);
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("hstack: " + shape(a) + " | " + shape(b));
  }
  ExactMatrix out(a.rows(), a.cols() + b.cols(), a.cfg());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionMismatch("vstack: " + shape(a) + " / " + shape(b));
  }
  ExactMatrix out(a.rows() + b.rows(), a.cols(), a.cfg());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() + b.rows(), a.cols() + b.cols(), a.cfg());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

}  // namespace ginv
