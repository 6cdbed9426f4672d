#pragma once

#include <stdexcept>
#include <string>

namespace groupoidal {

enum class ErrorKind { Parse, Validation, Bound };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) {
  throw Error(ErrorKind::Parse, msg);
}
[[noreturn]] inline void fail_validation(const std::string& msg) {
  throw Error(ErrorKind::Validation, msg);
}
[[noreturn]] inline void fail_bound(const std::string& msg) {
  throw Error(ErrorKind::Bound, msg);
}

}  // namespace groupoidal
