#include "colorlie/error.hpp"
#include "colorlie/report.hpp"

namespace colorlie {

const char *error_code_name(ErrorCode code) {
  switch (code) {
  case ErrorCode::Antisym: return "E_ANTISYM";
  case ErrorCode::Bilinear: return "E_BILINEAR";
  case ErrorCode::ZeroValue: return "E_ZERO_VALUE";
  case ErrorCode::Cocycle: return "E_COCYCLE";
  case ErrorCode::Unrepresentable: return "E_UNREPRESENTABLE";
  case ErrorCode::GroupMismatch: return "E_GROUP_MISMATCH";
  case ErrorCode::NotHomomorphism: return "E_NOT_HOMOMORPHISM";
  case ErrorCode::Gradation: return "E_GRADATION";
  case ErrorCode::ColorSym: return "E_COLOR_SYM";
  case ErrorCode::Jacobi: return "E_JACOBI";
  case ErrorCode::IncompatibleTriple: return "E_INCOMPATIBLE_TRIPLE";
  case ErrorCode::ParentMismatch: return "E_PARENT_MISMATCH";
  case ErrorCode::Termination: return "E_TERMINATION";
  case ErrorCode::NotAssociative: return "E_NOT_ASSOCIATIVE";
  case ErrorCode::NotRep: return "E_NOT_REP";
  case ErrorCode::EvenN: return "E_EVEN_N";
  case ErrorCode::SplitField: return "E_SPLIT_FIELD";
  case ErrorCode::NotSemisimple: return "E_NOT_SEMISIMPLE";
  case ErrorCode::NotAeEquiv: return "E_NOT_AE_EQUIV";
  case ErrorCode::NotEquiv: return "E_NOT_EQUIV";
  case ErrorCode::Parse: return "E_PARSE";
  case ErrorCode::Invalid: return "E_INVALID";
  }
  return "E_UNKNOWN";
}

void require(const CheckReport &report) {
  if (!report.passed)
    throw AlgebraError(ErrorCode::Invalid,
                       report.name + " failed with " + report.code + ": " + report.witness);
}

} // namespace colorlie
