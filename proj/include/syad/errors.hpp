#pragma once

#include <stdexcept>
#include <string>

namespace syad {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class GradeOutOfRange : public Error {
public:
  explicit GradeOutOfRange(double value)
      : Error("membership grade " + std::to_string(value) +
              " outside the unit interval [0, 1]") {}
};

class UnknownElement : public Error {
public:
  UnknownElement(const std::string& label, const std::string& universe)
      : Error("element '" + label + "' is not in universe '" + universe + "'") {}
};

class DuplicateElement : public Error {
public:
  explicit DuplicateElement(const std::string& label)
      : Error("duplicate element '" + label + "'") {}
};

class UniverseMismatch : public Error {
public:
  explicit UniverseMismatch(const std::string& detail)
      : Error("universe mismatch: " + detail) {}
};

class SchemaMismatch : public Error {
public:
  explicit SchemaMismatch(const std::string& detail)
      : Error("schema mismatch: " + detail) {}
};

/// 1-based position of a lexeme in DSL source text.
struct SourcePos {
  int line = 1;
  int column = 1;

  bool operator==(const SourcePos&) const = default;
};

/// An error that points at a location in DSL source.
class PositionedError : public Error {
public:
  PositionedError(const std::string& message, SourcePos pos)
      : Error(message), pos_(pos) {}

  SourcePos pos() const { return pos_; }

private:
  SourcePos pos_;
};

class LexError : public PositionedError {
public:
  using PositionedError::PositionedError;
};

class ParseError : public PositionedError {
public:
  using PositionedError::PositionedError;
};

class SemanticError : public PositionedError {
public:
  using PositionedError::PositionedError;
};

}  // namespace syad
