#pragma once

#include <stdexcept>
#include <string>

namespace modetopo {

/// A model-level contract was violated (bad face, dangling label, invalid
/// point). Reported by the CLI as a validation failure.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or unreadable file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modetopo
