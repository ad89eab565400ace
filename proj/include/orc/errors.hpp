#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orc {

// Library error carrying a stable machine-readable code ("SelfLoop",
// "DistanceTooSmall", ...) next to the human message. The CLI maps these to
// exit code 2; tests match on code().
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

}  // namespace orc
