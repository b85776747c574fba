#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginv {

// Base of every error the library throws. Non-existence of an inverse is
// never an error; it is reported through InverseReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Operands built over different FieldConfigs.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("matrix is not invertible") {}
  explicit NotInvertible(const std::string& what) : Error(what) {}
};

class ZeroMatrix : public Error {
 public:
  ZeroMatrix() : Error("zero matrix has no full rank factorization") {}
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class SpecViolation : public Error {
 public:
  SpecViolation(const std::string& field, const std::string& why)
      : Error("spec violation in '" + field + "': " + why), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class WrongCase : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class UnreachableCase : public Error {
 public:
  using Error::Error;
};

}  // namespace ginv
