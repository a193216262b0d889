#pragma once

#include <stdexcept>
#include <string>

namespace hetvenet {

enum class ErrorCode {
  invalid_argument,  // violated precondition or inconsistent inputs
  config,            // bad configuration file or values
  io,                // filesystem failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_argument, msg);
}

[[noreturn]] inline void throw_config(const std::string& msg) {
  throw Error(ErrorCode::config, msg);
}

[[noreturn]] inline void throw_io(const std::string& msg) {
  throw Error(ErrorCode::io, msg);
}

}  // namespace hetvenet
