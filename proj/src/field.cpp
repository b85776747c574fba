#include "ginv/field.hpp"

#include <cctype>
#include <optional>
#include <ostream>

#include "ginv/errors.hpp"

namespace ginv {

std::string to_string(FieldConfig cfg) {
  std::string out = cfg.is_gaussian() ? "gaussian_rationals" : "rationals";
  out += cfg.involution() == Involution::Conjugation ? "/conjugation"
                                                     : "/identity";
  return out;
}

Scalar::Scalar(long num, unsigned long den) {
  if (den == 0) throw DivisionByZero();
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

Scalar::Scalar(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_real()) return Scalar(mpq_class(1) / re_);
  // 1/(a+bi) = (a-bi)/(a^2+b^2)
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  if (sgn(rhs.im_) != 0) im_ += rhs.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar involute(const Scalar& x, FieldConfig cfg) {
  if (cfg.involution() == Involution::Conjugation) return x.conj();
  return x;
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    if (done()) fail("empty scalar");

    bool negative = accept('-');
    std::optional<mpq_class> magnitude = unsigned_rational();
    if (accept('i')) {
      mpq_class im = magnitude.value_or(mpq_class(1));
      finish();
      return Scalar(mpq_class(0), negative ? mpq_class(-im) : im);
    }
    if (!magnitude) fail("expected digits");
    mpq_class re = negative ? mpq_class(-*magnitude) : *magnitude;
    if (at_end()) return Scalar(re);

    bool im_negative;
    if (accept('+')) {
      im_negative = false;
    } else if (accept('-')) {
      im_negative = true;
    } else {
      fail("unexpected character");
    }
    mpq_class im = unsigned_rational().value_or(mpq_class(1));
    if (!accept('i')) fail("expected 'i'");
    finish();
    return Scalar(re, im_negative ? mpq_class(-im) : im);
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  bool accept(char c) {
    if (!done() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in scalar '" + std::string(text_) + "'", pos_);
  }

  bool at_end() {
    std::size_t save = pos_;
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    if (done()) return true;
    pos_ = save;
    return false;
  }

  void finish() {
    if (!at_end()) fail("trailing characters");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<mpq_class> unsigned_rational() {
    std::string num = digits();
    if (num.empty()) return std::nullopt;
    mpz_class numerator(num);
    mpz_class denominator(1);
    if (accept('/')) {
      std::string den = digits();
      if (den.empty()) fail("expected denominator digits");
      denominator = mpz_class(den);
      if (denominator == 0) fail("zero denominator");
    }
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return q;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string rational_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string to_string(const Scalar& x) {
  if (x.is_real()) return rational_text(x.re());
  std::string out;
  mpq_class im = x.im();
  bool im_negative = sgn(im) < 0;
  if (im_negative) im = -im;
  std::string im_text = im == 1 ? "" : rational_text(im);
  if (sgn(x.re()) != 0) {
    out = rational_text(x.re());
    out += im_negative ? '-' : '+';
  } else if (im_negative) {
    out = "-";
  }
  return out + im_text + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << to_string(x);
}

}  // namespace ginv
