#pragma once

#include <stdexcept>
#include <string>

namespace tpa {

enum class ErrorKind {
  dimension,
  invalid_argument,
  precondition,
  capacity,
  parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error dimension_error(const std::string& what) {
  return Error(ErrorKind::dimension, "dimension mismatch: " + what);
}

inline Error precondition_error(const std::string& what) {
  return Error(ErrorKind::precondition, "precondition failed: " + what);
}

}  // namespace tpa
