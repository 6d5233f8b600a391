#pragma once

#include "rgg/euclid/functionals.hpp"

namespace rgg::euclid::detail {

TourResult tsp_on(const EdgeWeights& w, const PointSet& ps, Mode mode);
MatchResult matching_on(const EdgeWeights& w, Mode mode);

}  // namespace rgg::euclid::detail
