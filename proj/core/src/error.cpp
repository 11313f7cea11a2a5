#include "nilloops/error.hpp"

namespace nilloops {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kBadShape: return "BadShape";
    case Errc::kNotLatin: return "NotLatin";
    case Errc::kNotNormalized: return "NotNormalized";
    case Errc::kNotSubloop: return "NotSubloop";
    case Errc::kNotCentralSubloop: return "NotCentralSubloop";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kNotSubspace: return "NotSubspace";
    case Errc::kNotCentral: return "NotCentral";
    case Errc::kGroupTooLarge: return "GroupTooLarge";
    case Errc::kNonIntegralCount: return "NonIntegralCount";
    case Errc::kGenerationTooLarge: return "GenerationTooLarge";
    case Errc::kOrderTooLarge: return "OrderTooLarge";
    case Errc::kNotOddPrime: return "NotOddPrime";
    case Errc::kNonIntegralTerm: return "NonIntegralTerm";
    case Errc::kUnsupportedOrder: return "UnsupportedOrder";
    case Errc::kParse: return "Parse";
    case Errc::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(Errc::kParse, "line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace nilloops
