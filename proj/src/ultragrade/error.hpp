#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ultragrade {

enum class ErrorCode : int {
  Syntax = 1,
  DanglingReference,
  EmptyRange,
  InvalidPresentation,
  InfiniteEmitter,
  NotFinite,
  NotRegular,
  NotHomogeneous,
  NotFiniteEdges,
  NotUnital,
  NoEdges,
  PathLengthCap,
  TermCountCap,
  MixedPresentation,
  NotInDomain,
  NotInIdeal,
  NotStronglyGraded,
  BoundExceeded,
  LimitExceeded,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable code. `line` is 1-based for parse
/// errors and 0 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, int line = 0)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  int line_;
};

}  // namespace ultragrade
