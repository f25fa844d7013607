#pragma once

#include <stdexcept>
#include <string>

namespace pin2k {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DivisionByZero : public Error {
public:
  explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

class ZeroDenominator : public Error {
public:
  explicit ZeroDenominator(const std::string& msg = "zero denominator") : Error(msg) {}
};

class GroupMismatch : public Error {
public:
  explicit GroupMismatch(const std::string& msg = "operands belong to different groups") : Error(msg) {}
};

class ParityViolation : public Error {
public:
  explicit ParityViolation(const std::string& msg) : Error(msg) {}
};

class PoleAtElement : public Error {
public:
  explicit PoleAtElement(const std::string& msg) : Error(msg) {}
};

class NonCyclicGroup : public Error {
public:
  explicit NonCyclicGroup(const std::string& msg = "operation requires a cyclic group") : Error(msg) {}
};

class NotUnique : public Error {
public:
  explicit NotUnique(const std::string& msg = "degree solution is not unique") : Error(msg) {}
};

class HypothesisNotMet : public Error {
public:
  explicit HypothesisNotMet(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& msg = "coordinate length does not match form rank") : Error(msg) {}
};

class SpinConditionFailed : public Error {
public:
  explicit SpinConditionFailed(const std::string& msg) : Error(msg) {}
};

class NonIntegralInvariant : public Error {
public:
  explicit NonIntegralInvariant(const std::string& msg) : Error(msg) {}
};

class ParityError : public Error {
public:
  explicit ParityError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

class SchemaError : public Error {
public:
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

}  // namespace pin2k
