#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prufer {

enum class ErrorKind {
  // hypertree validation
  EdgeTooSmall,
  InvalidVertex,
  Disconnected,
  NotATree,
  RootNotMax,
  UnknownVertex,
  NotAnEdge,
  // partitions and maps
  InvalidPartition,
  NotIdempotent,
  NotLowering,
  NotConstantOnPart,
  NotEventuallyRoot,
  IncompleteMap,
  CompositionMismatch,
  // codes
  LengthMismatch,
  LetterOutOfRange,
  VariantMismatch,
  // enumeration / permutations
  OutOfRange,
  DepthTooSmall,
  NotAPermutation,
  NoStabilization,
  // file formats
  ParseError,
};

/// Stable name of an error kind, e.g. "NotATree". Used verbatim in CLI diagnostics.
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace prufer
