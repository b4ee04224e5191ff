#pragma once

#include <stdexcept>
#include <string>

namespace dtomo {

// Machine-readable error codes surfaced by the CLI on stderr.
enum class Errc {
  DivisionByZero,
  NotAUnit,
  NotReal,
  NotADivisor,
  SubfieldAbsent,
  PrecisionExhausted,
  OrderTooSmall,
  OrderMismatch,
  WindowDegenerate,
  NoInternalSpace,
  SearchExhausted,
  ParallelPair,
  DegenerateTuple,
  DegeneratePolygon,
  RegionTooSmall,
  RegionTooLarge,
  TooFewDirections,
  UnsupportedField,
  UnsupportedN,
  UnsupportedLattice,
  NotColorable,
  ConstructionFailed,
  EmbeddingFailed,
  VerificationFailed,
  MalformedReference,
  MalformedInput,
  ViewportOverflow,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace dtomo
