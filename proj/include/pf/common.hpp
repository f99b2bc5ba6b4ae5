#pragma once

#include <stdexcept>
#include <string>

namespace pf {

// Thrown when an operation would exceed its configured search budget
// (exhaustive scans, backtracking oracles). Distinct from input errors
// (std::invalid_argument) and precondition violations (std::domain_error).
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pf
