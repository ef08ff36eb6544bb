#include "gcg/error.hpp"

namespace gcg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotLaurent: return "NotLaurent";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::MissingGenerator: return "MissingGenerator";
    case ErrorCode::InconsistentArguments: return "InconsistentArguments";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CriterionFails: return "CriterionFails";
    case ErrorCode::RTooSmall: return "RTooSmall";
    case ErrorCode::NotInRemoteSupport: return "NotInRemoteSupport";
    case ErrorCode::SymbolicModeUnsupported: return "SymbolicModeUnsupported";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gcg
