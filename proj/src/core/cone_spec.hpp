#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cone.hpp"
#include "int_matrix.hpp"

namespace toric {

struct ConeSpec {
  std::vector<IntVector> generators;
  std::optional<std::string> label;
};

/// Parses either the inline form "x1,y1;x2,y2" or a JSON object carrying a
/// "generators" array of integer arrays (top level or under "inputs"). JSON
/// entries may be integers or decimal strings. Errors are kParse with a
/// column (inline) or JSON path in the message.
ConeSpec parse_cone(std::string_view text);

/// parse_cone followed by SimplicialCone::make.
SimplicialCone to_cone(const ConeSpec& spec);

/// Same syntax as parse_cone, but rows need not form a square, and the JSON
/// key is "matrix". Any rectangular shape is accepted.
IntMatrix parse_matrix(std::string_view text);

}  // namespace toric
