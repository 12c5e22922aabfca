#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mfl {

enum class ErrorKind {
  NotHyperbolic,
  ExcludedClass,
  OutOfRange,
  SyntaxError,
  GenusZeroUnsupported,
  UnknownName,
  WrongSpace,
  InvalidCurveType,
  ForbiddenTacnodalType,
  CapExceeded,
  IllPosedPairing,
};

std::string_view to_string(ErrorKind kind);

// Base class of every domain error raised by the library. The CLI maps
// these to exit code 3 and prints name().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t required, std::uint64_t cap);

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace mfl
