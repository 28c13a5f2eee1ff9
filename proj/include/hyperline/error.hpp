#ifndef HYPERLINE_ERROR_HPP
#define HYPERLINE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperline {

// Every failure the library can report, by name. CLI exit codes and the
// C API status values map onto these one-to-one.
enum class ErrorCode {
  DivisionByZero,
  InfiniteArgument,
  NonPositiveBase,
  UnsupportedForm,
  CapExceeded,
  SyntaxError,
  OutOfRange,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // Message without the taxonomy prefix.
  const std::string& detail() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// Syntax errors carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(ErrorCode::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hyperline

#endif
