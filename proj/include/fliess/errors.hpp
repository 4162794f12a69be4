#pragma once

#include <stdexcept>
#include <string>

namespace fliess {

// Failure categories; the CLI maps these to its exit codes.
enum class ErrorCode {
  ParseError,       // malformed text/JSON input, or a word beyond the truncation degree
  Precondition,     // violated operation precondition (mismatched truncation, proper series, ...)
  PropertyFailure,  // a runtime consistency check or acceptance criterion failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) {
  throw Error(ErrorCode::ParseError, msg);
}

[[noreturn]] inline void throw_precondition(const std::string& msg) {
  throw Error(ErrorCode::Precondition, msg);
}

}  // namespace fliess
