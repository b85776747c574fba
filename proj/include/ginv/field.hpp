#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ginv {

enum class Base { Rationals, GaussianRationals };
enum class Involution { Identity, Conjugation };

// The scalar field together with its involution. Conjugation over Q is the
// identity map, so it is normalized away on construction.
class FieldConfig {
 public:
  constexpr FieldConfig() = default;
  constexpr FieldConfig(Base base, Involution involution)
      : base_(base),
        involution_(base == Base::Rationals ? Involution::Identity
                                            : involution) {}

  static constexpr FieldConfig rationals() { return {}; }
  static constexpr FieldConfig gaussian(Involution inv) {
    return {Base::GaussianRationals, inv};
  }

  constexpr Base base() const { return base_; }
  constexpr Involution involution() const { return involution_; }
  constexpr bool is_gaussian() const { return base_ == Base::GaussianRationals; }

  friend constexpr bool operator==(FieldConfig, FieldConfig) = default;

 private:
  Base base_ = Base::Rationals;
  Involution involution_ = Involution::Identity;
};

std::string to_string(FieldConfig cfg);

// Element of Q(i); elements of Q have a zero imaginary part. Both parts are
// kept in lowest terms, so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, unsigned long den);
  explicit Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im);

  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  // Throws DivisionByZero for zero.
  Scalar inv() const;
  // Complex conjugate, independent of any configured involution.
  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inv(); }

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Applies the involution selected by cfg.
Scalar involute(const Scalar& x, FieldConfig cfg);

// Grammar: an optional rational real part followed by an optional signed
// imaginary term `[+-][rational]i`, e.g. "5", "-3/6", "1/2+3/4i", "-2i", "i".
// Throws ParseError carrying the offending byte offset.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace ginv
