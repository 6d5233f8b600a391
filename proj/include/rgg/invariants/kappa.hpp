#pragma once

#include <cstddef>

#include "rgg/point_set.hpp"

namespace rgg {

/// Centres of unit balls whose union covers the closed ball B_2(o).
/// d = 1: {-1, 1}. d = 2: the origin plus 7 centres on a ring of radius 1.7.
/// d >= 3: centres of a cube grid over [-2, 2]^d with m = floor(2 sqrt d) + 1
/// cells per axis, so each cell has half-diagonal below 1.
PointSet kappa_construction(int dim);

/// Upper bound on kappa(B_2(o)), the number of closed unit balls needed to
/// cover B_2(o). For d <= 3 the construction is checked by the coverage
/// verifier on first use; for d >= 4 the cube bound m^d is returned
/// without a numerical check.
std::size_t kappa_ball_constant(int dim);

}  // namespace rgg
