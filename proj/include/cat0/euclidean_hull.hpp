#pragma once

#include <vector>

#include "cat0/point.hpp"
#include "cat0/space.hpp"

namespace cat0 {

/// Exact distance from z to the convex hull of a small Euclidean point set,
/// by projecting z onto the affine hull of every affinely independent subset
/// of at most dim+1 points and keeping projections with nonnegative
/// barycentric coordinates. Intended as an independent oracle; cost grows
/// combinatorially in |points|.
double euclidean_hull_distance(const Space& space, const std::vector<Point>& points,
                               const Point& z);

/// true iff z is within tol of co(points). Euclidean spaces only.
bool euclidean_hull_membership(const Space& space, const std::vector<Point>& points,
                               const Point& z, double tol);

}  // namespace cat0
