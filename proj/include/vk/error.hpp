#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vk {

enum class ErrorKind {
  SyntaxError,
  UnmatchedLabel,
  SignMismatch,
  RoleMismatch,
  NoSuchLabel,
  InvalidSite,
  InvalidVertex,
  InvalidSurfaceDiagram,
  NoSuchEntry,
  Overflow,
  InexactDivision,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace vk
