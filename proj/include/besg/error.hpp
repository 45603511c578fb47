#pragma once

#include <stdexcept>
#include <string>

namespace besg {

/// Thrown on precondition violations, malformed inputs and schema errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace besg
