#include "pbij/error.hpp"

namespace pbij
{

std::string_view error_name(ErrorCode code)
{
  switch (code) {
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::HoleExceptionOverlap: return "HoleExceptionOverlap";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NonZeroIndex: return "NonZeroIndex";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_status(ErrorCode code)
{
  switch (code) {
    case ErrorCode::NotInjective:
    case ErrorCode::NegativeValue:
    case ErrorCode::HoleExceptionOverlap:
    case ErrorCode::NotPermutation:
      return 1;
    case ErrorCode::NonZeroIndex:
    case ErrorCode::IndexMismatch:
    case ErrorCode::WindowTooSmall:
      return 2;
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return 3;
  }
  return 3;
}

Error::Error(ErrorCode code, std::string const &detail)
  : std::runtime_error(std::string(error_name(code)) + ": " + detail),
    _code(code),
    _detail(detail)
{}

} // namespace pbij
