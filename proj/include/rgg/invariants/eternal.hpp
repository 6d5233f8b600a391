#pragma once

#include <vector>

#include "rgg/geograph.hpp"

namespace rgg {

/// All k-guard configurations from which every attack sequence can be
/// defended (the greatest fixpoint). Graph size is limited to 26 vertices.
std::vector<std::vector<std::size_t>> eternal_safe_family(const GeometricGraph& g, std::size_t k);

/// Independent check that a family is nonempty, dominating, and closed under
/// every attack with a single adjacent guard move.
bool is_eternal_safe_family(const GeometricGraph& g, const std::vector<std::vector<std::size_t>>& family);

}  // namespace rgg
