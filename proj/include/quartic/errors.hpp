#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quartic {

// Base for every error raised by the library. Messages are meant for users of
// the CLI, so they name the offending quantity.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class ZeroCoefficient : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NonUnit : public Error {
 public:
  using Error::Error;
};

class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPairing : public Error {
 public:
  using Error::Error;
};

class MissingRung : public Error {
 public:
  MissingRung(const std::string& what, int level) : Error(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

class LevelNotFree : public Error {
 public:
  using Error::Error;
};

// Hensel step with no admissible candidate. Cannot happen for hypotheses that
// satisfy the lifting lemma, so it signals an internal inconsistency.
class StepFailed : public Error {
 public:
  using Error::Error;
};

class NoZeroFound : public Error {
 public:
  using Error::Error;
};

}  // namespace quartic
