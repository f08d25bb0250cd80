#include "intertwine/error.hpp"

namespace intertwine {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::SizeMismatch: return "size_mismatch";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::NotInIndexSet: return "not_in_index_set";
    case ErrorCode::WrongSize: return "wrong_size";
    case ErrorCode::IntertwiningPair: return "intertwining_pair";
    case ErrorCode::NotASlice: return "not_a_slice";
    case ErrorCode::NotAMember: return "not_a_member";
    case ErrorCode::DuplicateTarget: return "duplicate_target";
    case ErrorCode::WrongPieceCount: return "wrong_piece_count";
    case ErrorCode::NotInImage: return "not_in_image";
    case ErrorCode::GuardViolation: return "guard_violation";
    case ErrorCode::InconsistentLabels: return "inconsistent_labels";
    case ErrorCode::WrapRuleMismatch: return "wrap_rule_mismatch";
    case ErrorCode::AprTargetMissing: return "apr_target_missing";
    case ErrorCode::MalformedInput: return "malformed_input";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<std::vector<int>> offending)
    : std::runtime_error(message), code_(code), offending_(std::move(offending)) {}

}  // namespace intertwine
