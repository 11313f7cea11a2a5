#pragma once

#include <stdexcept>
#include <string>

namespace nilloops {

enum class Errc {
  kBadShape,
  kNotLatin,
  kNotNormalized,
  kNotSubloop,
  kNotCentralSubloop,
  kDimensionMismatch,
  kNotSubspace,
  kNotCentral,
  kGroupTooLarge,
  kNonIntegralCount,
  kGenerationTooLarge,
  kOrderTooLarge,
  kNotOddPrime,
  kNonIntegralTerm,
  kUnsupportedOrder,
  kParse,
  kIo,
};

const char* errc_name(Errc code) noexcept;

// Base exception for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Failure while reading the loop text format; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace nilloops
