#pragma once

#include <string>

#include <json.hpp>

#include "enprune/complex.hpp"

namespace enprune {

/// {"grading": name, "modules": [{"gens": [{"label", "deg"}]}],
///  "maps": [{"entries": [[row, col, "poly"]]}], "ring": {"field", "variables"},
///  "killed": [names], "grading_data": {"var_degrees", "total", "base_total"}}
nlohmann::json complex_to_json(const BasedComplex& c);
std::string complex_to_json_text(const BasedComplex& c, int indent = 2);
/// Parses and validates; a missing "grading_data" is allowed for the
/// "standard" and "fine" gradings.
BasedComplex complex_from_json(const nlohmann::json& j);
BasedComplex complex_from_json_text(const std::string& text);
BasedComplex load_complex(const std::string& path);

/// Generator labels with degrees, then each map as a dense matrix.
std::string complex_to_text(const BasedComplex& c);

struct DiffResult {
  bool equal = false;
  std::string reason;
};

/// Decides whether b is obtained from a by permuting each basis and changing
/// signs of basis vectors (degrees must match).
DiffResult complex_diff(const BasedComplex& a, const BasedComplex& b);

}  // namespace enprune
