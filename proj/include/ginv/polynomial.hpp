#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ginv/field.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

// Univariate polynomial, constant term first, trailing zeros stripped.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  Polynomial(std::initializer_list<Scalar> coeffs)
      : Polynomial(std::vector<Scalar>(coeffs)) {}

  // lambda^k
  static Polynomial monomial(std::size_t k, Scalar coeff = Scalar(1));

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as 0; check is_zero() first.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar();
  }
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Scalar operator()(const Scalar& x) const;
  // Horner evaluation at a square matrix.
  ExactMatrix operator()(const ExactMatrix& a) const;

 private:
  void strip();
  std::vector<Scalar> coeffs_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                         const Polynomial& den);

struct ZeroMultiplicity {
  std::size_t k = 0;
  Polynomial g;  // p = lambda^k * g, g(0) != 0
};

// Splits off the largest power of lambda dividing a nonzero p.
ZeroMultiplicity zero_multiplicity(const Polynomial& p);

// Human-readable form in the variable `var`, e.g. "x^4 - x^2".
std::string to_string(const Polynomial& p, const std::string& var = "x");
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace ginv
