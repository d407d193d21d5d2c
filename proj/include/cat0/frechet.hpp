#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cat0/cloud.hpp"
#include "cat0/threading.hpp"

namespace cat0 {

/// Weighted p-objective F_p(x) = Σ w_i d(x, x_i)^p over one space, p ∈ {1,2}.
/// Weights are normalized to sum 1 at construction; zero weights are allowed,
/// an all-zero weight vector is not.
struct FrechetProblem {
    Space space = Space::biquadrant();
    std::vector<Point> points;
    std::vector<double> weights;
    int p = 2;

    static FrechetProblem make(Space space, std::vector<Point> points,
                               std::vector<double> weights, int p);
};

double frechet_objective(const FrechetProblem& problem, const Point& x);

/// Closed form Σ w_i x_i; Euclidean spaces with p = 2 only.
Point euclidean_mean(const FrechetProblem& problem);

enum class AnchorOrder {
    cycle,   // anchors in index order; reproduces the closed form exactly
    random,  // anchors i.i.d. with probability w_i (stochastic scheme)
};

struct SolverResult {
    Point minimizer = Point::euclidean({0.0});
    double objective = 0.0;
    int iterations = 0;
    std::string method;
    std::optional<double> certificate_distance;   // distance to the hull cloud
    std::optional<double> certificate_threshold;  // eps + grid resolution
    bool certificate_pass = false;
    bool near_tie = false;            // p = 1: another argmin within 1e-9
    bool degraded_accuracy = false;   // hull cloud did not stabilize
};

/// Geodesic recursion x_k = interpolate(x_{k-1}, anchor_k, 1/(k+1)) started
/// at the first anchor. p = 2 only.
SolverResult inductive_mean(const FrechetProblem& problem, int n_iters, std::uint64_t seed,
                            AnchorOrder order = AnchorOrder::random);

struct SearchParams {
    HullParams hull;
    int refine_steps = 3;
};

/// Argmin of the objective over the convex-hull cloud of the problem points,
/// refined by golden-section sweeps along geodesics toward each anchor.
/// Result never exceeds the objective of any cloud point.
SolverResult threading_search_mean(const FrechetProblem& problem, const SearchParams& params);

struct HullCertificate {
    double distance = 0.0;   // min distance from x to the hull cloud
    double threshold = 0.0;  // eps + grid resolution of the hull run
    bool pass = false;
    bool hull_stabilized = false;
};

HullCertificate certify_in_hull(const FrechetProblem& problem, const Point& x, double eps,
                                const HullParams& params);

struct ProjectionCheckResult {
    bool pass = true;
    double worst_violation = 0.0;  // max of d(x,Px)² + d(Px,y)² − d(x,y)²
    int n_samples = 0;
    std::optional<Point> witness_x;
};

/// Samples random x (and cloud points y) and checks the projection
/// inequality against the nearest cloud point as the projection surrogate;
/// tol absorbs the cloud resolution.
ProjectionCheckResult projection_inequality_check(const Space& space, const PointCloud& hull,
                                                  int n_samples, std::uint64_t seed, double tol,
                                                  double box_radius = 10.0);

}  // namespace cat0
