#pragma once

#include <stdexcept>
#include <string>

namespace cdgalab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'") {}
};

class MixedAlgebra : public Error {
 public:
  MixedAlgebra() : Error("operands live in different algebras") {}
};

class CapOverflow : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Invalid differential data: degree mismatch, foreign generators, d^2 != 0.
class DifferentialError : public Error {
 public:
  explicit DifferentialError(const std::string& message, std::string generator = {})
      : Error(message), generator_(std::move(generator)) {}
  /// Offending generator, when one is known.
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

class MorphismError : public Error {
 public:
  using Error::Error;
};

/// A degree outside the range where the truncated data decides the answer.
class UndecidableDegree : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class ObstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace cdgalab
