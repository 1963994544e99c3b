#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sgp {

enum class ErrorKind {
  EmptyInput,
  InvalidGenerator,
  GcdNotOne,
  TooLarge,
  NotAMember,
  NotPseudoFrobenius,
  FIsNGEntry,
  NotNearlyGorenstein,
  EnumerationCap,
  MismatchedF,
  WrongEmbeddingDimension,
  BNotOdd,
  BNotInS,
  NotAnIdeal,
  TTooSmall,
  PreconditionViolated,
  NotAlmostSymmetric,
  PostconditionFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base exception for every recoverable failure in the library. The kind is
/// stable and is what the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown when a matrix enumeration would exceed the configured cap. The exact
/// number of matrices is still reported.
class EnumerationCapError : public Error {
 public:
  EnumerationCapError(std::uint64_t count, std::uint64_t cap);

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

}  // namespace sgp
