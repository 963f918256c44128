#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddisc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// polyring

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class MissingAssignment : public Error {
 public:
  explicit MissingAssignment(const std::string& name)
      : Error("no assignment for variable '" + name + "'") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class ExponentOverflow : public Error {
 public:
  ExponentOverflow() : Error("exponent exceeds the supported range") {}
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("polynomials belong to different rings") {}
};

// groebner

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotZeroDimensional : public Error {
 public:
  using Error::Error;
};

class ZeroIdeal : public Error {
 public:
  using Error::Error;
};

class NotPrincipal : public Error {
 public:
  using Error::Error;
};

// likelihood

class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NonHomogeneousInvariant : public Error {
 public:
  using Error::Error;
};

class VariableOutOfRange : public Error {
 public:
  using Error::Error;
};

// discriminant

class UnluckyRandomness : public Error {
 public:
  UnluckyRandomness(const std::string& message, std::uint64_t seed)
      : Error(message + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

class SingularSampleMatrix : public Error {
 public:
  using Error::Error;
};

class DegreeDrop : public Error {
 public:
  using Error::Error;
};

// realclass

class EndpointRoot : public Error {
 public:
  using Error::Error;
};

class NotShapePosition : public Error {
 public:
  using Error::Error;
};

}  // namespace ddisc
