#pragma once

#include <stdexcept>
#include <string>

namespace colorlie {

/// Error codes surfaced by validators and structural operations.
enum class ErrorCode {
  Antisym,
  Bilinear,
  ZeroValue,
  Cocycle,
  Unrepresentable,
  GroupMismatch,
  NotHomomorphism,
  Gradation,
  ColorSym,
  Jacobi,
  IncompatibleTriple,
  ParentMismatch,
  Termination,
  NotAssociative,
  NotRep,
  EvenN,
  SplitField,
  NotSemisimple,
  NotAeEquiv,
  NotEquiv,
  Parse,
  Invalid,
};

const char *error_code_name(ErrorCode code);

class AlgebraError : public std::runtime_error {
public:
  AlgebraError(ErrorCode code, const std::string &detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code), detail_(detail) {}

  ErrorCode code() const { return code_; }
  const std::string &detail() const { return detail_; }

private:
  ErrorCode code_;
  std::string detail_;
};

/// Parse failure with a 0-based character offset into the input.
class ParseError : public AlgebraError {
public:
  ParseError(std::size_t position, const std::string &what)
      : AlgebraError(ErrorCode::Parse,
                     "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace colorlie
