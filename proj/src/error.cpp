#include "vk/error.hpp"

namespace vk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnmatchedLabel: return "UnmatchedLabel";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::RoleMismatch: return "RoleMismatch";
    case ErrorKind::NoSuchLabel: return "NoSuchLabel";
    case ErrorKind::InvalidSite: return "InvalidSite";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidSurfaceDiagram: return "InvalidSurfaceDiagram";
    case ErrorKind::NoSuchEntry: return "NoSuchEntry";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

}  // namespace vk
