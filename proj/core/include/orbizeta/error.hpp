#pragma once

#include <stdexcept>
#include <string>

namespace orbizeta {

// Every failure raised by the library. `kind` is a short machine-readable tag;
// what() carries the human message.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    Arithmetic,
    Parse,
    Validation,
    Unsupported,
    Precondition,
    Budget,
    Structure,
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace orbizeta
