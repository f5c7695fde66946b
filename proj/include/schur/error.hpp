#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace schur {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mathematically invalid input: bad ranges, mismatched contexts, violated
/// preconditions, arithmetic overflow of tuple entries.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A permutation group is larger than the configured enumeration limit.
class EnumerationLimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : Error(what), position_(std::string::npos) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("integer overflow in tuple arithmetic");
  }
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw DomainError("integer overflow in tuple arithmetic");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("integer overflow in tuple arithmetic");
  }
  return out;
}

}  // namespace detail
}  // namespace schur
