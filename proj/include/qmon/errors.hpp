#pragma once

#include <stdexcept>
#include <string>

namespace qmon {

// Malformed input: bad tables, unparsable text, wrong degrees, out-of-range
// indices.  Distinct from a well-formed object failing a mathematical check
// (the latter is reported, not thrown).
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed the configured degree or size budget.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmon
