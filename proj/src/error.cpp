#include "mfl/error.hpp"

namespace mfl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::ExcludedClass: return "ExcludedClass";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::GenusZeroUnsupported: return "GenusZeroUnsupported";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::WrongSpace: return "WrongSpace";
    case ErrorKind::InvalidCurveType: return "InvalidCurveType";
    case ErrorKind::ForbiddenTacnodalType: return "ForbiddenTacnodalType";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IllPosedPairing: return "IllPosedPairing";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(ErrorKind::SyntaxError,
            "at position " + std::to_string(position) + ": " + message),
      position_(position) {}

CapExceeded::CapExceeded(std::uint64_t required, std::uint64_t cap)
    : Error(ErrorKind::CapExceeded,
            "enumeration needs " + std::to_string(required) +
                " entries, cap is " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

}  // namespace mfl
