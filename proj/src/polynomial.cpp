#include "ginv/polynomial.hpp"

#include <ostream>

#include "ginv/errors.hpp"

namespace ginv {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  strip();
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t k, Scalar coeff) {
  std::vector<Scalar> c(k + 1);
  c[k] = std::move(coeff);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Scalar lead_inv = leading().inv();
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c *= lead_inv;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  strip();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactMatrix Polynomial::operator()(const ExactMatrix& a) const {
  if (!a.is_square()) throw DimensionMismatch("polynomial of non-square matrix");
  const auto id = ExactMatrix::identity(a.rows(), a.cfg());
  ExactMatrix acc = ExactMatrix::zero(a.rows(), a.cols(), a.cfg());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + id * *it;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num,
                                         const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero() || num.degree() < den.degree()) return {Polynomial(), num};
  std::vector<Scalar> rem = num.coeffs();
  std::vector<Scalar> quot(num.degree() - den.degree() + 1);
  const Scalar lead_inv = den.leading().inv();
  const std::size_t dd = den.degree();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Scalar q = rem[i + dd] * lead_inv;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * den.coeffs()[j];
    quot[i] = std::move(q);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

ZeroMultiplicity zero_multiplicity(const Polynomial& p) {
  if (p.is_zero()) throw Error("zero_multiplicity of the zero polynomial");
  std::size_t k = 0;
  while (p.coeffs()[k].is_zero()) ++k;
  std::vector<Scalar> g(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                        p.coeffs().end());
  return {k, Polynomial(std::move(g))};
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Scalar& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    std::string term;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    Scalar mag = negative ? -c : c;
    bool unit = mag.is_one();
    if (!unit || i == 0) {
      term = mag.is_real() ? to_string(mag) : "(" + to_string(mag) + ")";
    }
    if (i > 0) term += var;
    if (i > 1) term += "^" + std::to_string(i);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << to_string(p);
}

}  // namespace ginv
