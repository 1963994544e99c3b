#include "sgp/error.hpp"

namespace sgp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotPseudoFrobenius: return "NotPseudoFrobenius";
    case ErrorKind::FIsNGEntry: return "FIsNGEntry";
    case ErrorKind::NotNearlyGorenstein: return "NotNearlyGorenstein";
    case ErrorKind::EnumerationCap: return "EnumerationCap";
    case ErrorKind::MismatchedF: return "MismatchedF";
    case ErrorKind::WrongEmbeddingDimension: return "WrongEmbeddingDimension";
    case ErrorKind::BNotOdd: return "BNotOdd";
    case ErrorKind::BNotInS: return "BNotInS";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::TTooSmall: return "TTooSmall";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotAlmostSymmetric: return "NotAlmostSymmetric";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

EnumerationCapError::EnumerationCapError(std::uint64_t count, std::uint64_t cap)
    : Error(ErrorKind::EnumerationCap,
            std::to_string(count) + " items exceed the cap of " + std::to_string(cap)),
      count_(count),
      cap_(cap) {}

}  // namespace sgp
