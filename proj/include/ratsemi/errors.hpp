#pragma once

#include <stdexcept>
#include <string>

namespace ratsemi {

// Base class for all toolkit errors.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A composition/iteration/search would exceed the configured degree cap.
// Signals bound exhaustion, not data corruption.
struct degree_cap_error : error {
  explicit degree_cap_error(const std::string& what) : error(what) {}
};

// Numeric certification failed even after precision escalation.
struct precision_error : error {
  explicit precision_error(const std::string& what) : error(what) {}
};

// Malformed or out-of-contract input.
struct invalid_input_error : error {
  explicit invalid_input_error(const std::string& what) : error(what) {}
};

}  // namespace ratsemi
