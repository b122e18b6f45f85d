#pragma once

#include <string>

#include "semigraph/array.hpp"

namespace semigraph {

/// Aligned-text rendering for terminals: row keys down the left, column
/// keys across the top, the algebra's zero printed as blank, numeric values
/// right-aligned.
std::string render_text_table(const AssociativeArray& arr);

}  // namespace semigraph
