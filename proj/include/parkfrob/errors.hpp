#pragma once

#include <stdexcept>
#include <string>

namespace parkfrob {

enum class ErrorKind {
  // Bad arguments, violated preconditions, configured caps exceeded.
  input,
  // Two independent computation routes disagreed.
  identity,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) {
  return Error(ErrorKind::input, what);
}

inline Error identity_error(const std::string& what) {
  return Error(ErrorKind::identity, what);
}

}  // namespace parkfrob
