#pragma once

#include <span>

#include "thinsim/geometry.hpp"

namespace thinsim {

// Smallest convex polygon containing all input points (Andrew's monotone
// chain, O(N log N)). Output vertices are in counterclockwise order starting
// at the lexicographically smallest point; collinear points on hull edges are
// dropped, so the result is strictly convex. Throws DegenerateInput for fewer
// than 3 distinct points or an all-collinear input.
Polygon2 convex_hull(std::span<const Vec2> points);

Polygon2 convex_hull(const Polygon2& polygon);

// True if `p` is inside or on the boundary of a convex CCW polygon.
bool point_in_convex(const Polygon2& hull, const Vec2& p, double eps = 1e-12);

}  // namespace thinsim
