#pragma once

#include <stdexcept>
#include <string>

namespace grundy {

enum class ErrorKind {
  parse,         // malformed input file
  input,         // bad argument to an operation
  validation,    // modulator or coloring structure violation
  wrong_solver,  // instance handed to an algorithm for a different k
  guard,         // size guard exceeded
  resource,      // search budget exhausted
  contract,      // API precondition violated
  internal,      // solver self-check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace grundy
