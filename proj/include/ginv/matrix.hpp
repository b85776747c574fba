#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "ginv/field.hpp"

namespace ginv {

// Dense row-major matrix of exact scalars. Every entry belongs to cfg's
// field; mixing matrices of different configs throws FieldMismatch.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, FieldConfig cfg = {});
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries,
              FieldConfig cfg = {});
  ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> rows,
              FieldConfig cfg = {});

  static ExactMatrix zero(std::size_t rows, std::size_t cols,
                          FieldConfig cfg = {});
  static ExactMatrix identity(std::size_t n, FieldConfig cfg = {});
  static ExactMatrix diagonal(std::span<const Scalar> diag,
                              FieldConfig cfg = {});
  static ExactMatrix column(std::span<const Scalar> v, FieldConfig cfg = {});
  static ExactMatrix row(std::span<const Scalar> v, FieldConfig cfg = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldConfig cfg() const { return cfg_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_zero() const;

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const std::vector<Scalar>& entries() const { return entries_; }

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  ExactMatrix& operator*=(const Scalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    return a += b;
  }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
    return a -= b;
  }
  friend ExactMatrix operator*(ExactMatrix a, const Scalar& s) { return a *= s; }
  friend ExactMatrix operator*(const Scalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cfg_ == b.cfg_ &&
           a.entries_ == b.entries_;
  }

  ExactMatrix transpose() const;
  // Conjugate transpose under cfg's involution.
  ExactMatrix adjoint() const;
  // Entrywise involution without transposing.
  ExactMatrix involuted() const;
  ExactMatrix pow(std::size_t k) const;

  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                    std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);
  ExactMatrix column_at(std::size_t c) const { return block(0, c, rows_, 1); }

  // Same entries reinterpreted in a (possibly wider) field.
  ExactMatrix with_cfg(FieldConfig cfg) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldConfig cfg_{};
  std::vector<Scalar> entries_;
};

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);

// Throws DimensionMismatch / FieldMismatch.
void require_same_shape(const ExactMatrix& a, const ExactMatrix& b,
                        const char* op);
void require_same_field(const ExactMatrix& a, const ExactMatrix& b,
                        const char* op);

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

}  // namespace ginv
