#pragma once

#include <cstddef>
#include <vector>

#include "cat0/cloud.hpp"
#include "cat0/threading.hpp"

namespace cat0 {

struct HullConvergenceStep {
    std::size_t n = 0;   // prefix size
    double gap = 0.0;    // d_H(hull cloud of the prefix, target)
};

struct HullConvergenceReport {
    std::vector<HullConvergenceStep> steps;
    double sampling_resolution = 0.0;  // max nearest-neighbor distance in target
    double final_gap = 0.0;
    bool reached_tolerance = false;    // final_gap <= 2 * sampling_resolution
    bool gaps_monotone_after_first = true;
};

/// Orders the target by farthest-point traversal, takes geometrically growing
/// prefixes S_n (last prefix = whole target), and measures
/// d_H(convex_hull_cloud(S_n), target) for each.
HullConvergenceReport increasing_hull_convergence(const PointCloud& target, int n_steps,
                                                  const HullParams& params);

struct ChainLimitVerdict {
    bool pass = false;
    std::vector<double> gaps;  // d_H(union of the first i clouds, limit)
    bool nonincreasing = true;
    double final_gap = 0.0;
};

/// Checks that prefix unions of a nondecreasing chain approach the limit:
/// gaps nonincreasing and the last one <= tol. Non-nested input (an element
/// not eps-contained in its successor) is rejected with InputError.
ChainLimitVerdict chain_limit_check(const std::vector<PointCloud>& chain,
                                    const PointCloud& limit, double tol);

/// Full greedy farthest-point ordering of a cloud (first point: farthest from
/// the embedded centroid, ties to the lowest index).
std::vector<std::int32_t> farthest_point_order(const PointCloud& cloud);

}  // namespace cat0
