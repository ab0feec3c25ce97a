#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbij
{

enum class ErrorCode
{
  // validation of a map's finite data
  NotInjective,
  NegativeValue,
  HoleExceptionOverlap,
  NotPermutation,
  // theorem preconditions
  NonZeroIndex,
  IndexMismatch,
  WindowTooSmall,
  // input handling
  ParseError,
  IoError,
};

std::string_view error_name(ErrorCode code);

// Process exit status used by the command-line tool for this error class.
int exit_status(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &detail);

  ErrorCode code() const
  { return _code; }

  std::string const &detail() const
  { return _detail; }

private:
  ErrorCode _code;
  std::string _detail;
};

} // namespace pbij
