#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cat3 {

enum class Errc {
  DisconnectedComplex,
  DuplicateVertexInSimplex,
  EmptySimplex,
  EmptyComplex,
  SimplexNotInComplex,
  UnknownVertex,
  EmptyOrDisconnectedResult,
  NotAnEdge,
  DimensionTooHigh,
  NotSimplicial,
  InvalidPermutation,
  UnsupportedN,
  InvalidStep,
  GeodesicLimitExceeded,
  NotADisk,
  LabelNotAFace,
  SingularDisk,
  NoDiskWithinBound,
  DiskLimitExceeded,
  NotClosed,
  LabelMismatchOnGamma,
  UnresolvableVertex,
  MoveMismatch,
  TargetNotGeodesic,
  EndpointMismatch,
  NoMoveSequence,
  NotGeodesic,
  TooManyCompanions,
  NonTermination,
  AlphabetMismatch,
  SyntaxError,
  TooHighDimension,
  BadParams,
  DeclaredCat0Contradiction,
};

std::string_view errc_name(Errc code);

/// Every failure in the library is reported as an Error carrying a code.
/// `line` is set only for parse errors (1-based), otherwise 0.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, int line = 0)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  int line() const noexcept { return line_; }

 private:
  Errc code_;
  int line_;
};

}  // namespace cat3
