#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace intertwine {

enum class ErrorCode {
  InvalidArgument,
  SizeMismatch,
  Precondition,
  NotInIndexSet,
  WrongSize,
  IntertwiningPair,
  NotASlice,
  NotAMember,
  DuplicateTarget,
  WrongPieceCount,
  NotInImage,
  GuardViolation,
  InconsistentLabels,
  WrapRuleMismatch,
  AprTargetMissing,
  MalformedInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// Domain error raised by every library entry point. `offending` carries the
// element lists of the subsets that caused the failure (e.g. an intertwining
// pair) so that callers can report them without re-running the check.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<std::vector<int>> offending = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::vector<int>>& offending() const noexcept { return offending_; }

 private:
  ErrorCode code_;
  std::vector<std::vector<int>> offending_;
};

}  // namespace intertwine
