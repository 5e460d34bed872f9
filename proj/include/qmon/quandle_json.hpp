#pragma once

#include <string>

#include "qmon/finite_quandle.hpp"

namespace qmon {

// On-disk table format:
//   {"format": 1, "n": <int>, "rhd": [[int]], "labels": ["..."]?}
// "format" and "labels" are optional on input.  The loader derives the
// inverse translation table and rejects tables whose columns are not
// bijections (StructuralError).
FiniteQuandle quandle_from_json(const std::string& text);
FiniteQuandle quandle_from_file(const std::string& path);

std::string quandle_to_json(const FiniteQuandle& q);

}  // namespace qmon
