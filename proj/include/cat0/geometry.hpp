#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cat0/point.hpp"
#include "cat0/rng.hpp"
#include "cat0/space.hpp"

namespace cat0 {

/// Geodesic distance between two points of `space`.
/// Bi-quadrant: same quadrant -> Euclidean, opposite quadrants -> ‖x‖ + ‖y‖
/// (the shortest path is broken through the origin). Product: ℓ² combination.
double dist(const Space& space, const Point& x, const Point& y);

/// The point x_t on the unique geodesic [x, y] with d(x, x_t) = t·d(x, y).
/// t must lie in [0, 1]; x == y returns x for every t.
Point interpolate(const Space& space, const Point& x, const Point& y, double t);

/// Comparison-inequality slack at (x, y, z, t):
///   (1-t)d(x,z)² + t·d(y,z)² − t(1-t)d(x,y)² − d(x_t,z)².
/// Nonnegative everywhere iff the space is CAT(0); identically zero iff flat.
double cat0_defect(const Space& space, const Point& x, const Point& y, const Point& z, double t);

/// Uniform sample in the canonical box: coordinates in [-R, R] for Euclidean
/// factors; fair-coin quadrant with magnitudes in [0, R] for bi-quadrant.
Point sample_point(const Space& space, Rng& rng, double box_radius);

struct DefectWitness {
    Point x, y, z;
    double t = 0.0;
    double defect = 0.0;
};

struct FlatnessVerdict {
    bool flat = false;
    double max_abs_defect = 0.0;
    double min_defect = 0.0;
    std::optional<DefectWitness> witness;  // present when not flat
};

/// Samples n quadruples (x, y, z, t) and reports flat iff max |defect| <= tol.
FlatnessVerdict is_flat_sample(const Space& space, int n_samples, std::uint64_t seed,
                               double tol, double box_radius = 10.0);

/// Statistical certificate for one space: metric axioms, geodesic
/// parameterization, interpolation symmetry and the comparison inequality,
/// all over seeded random draws.
struct SpaceCheckReport {
    int trials = 0;
    std::uint64_t seed = 0;
    double box_radius = 0.0;
    double min_distance = 0.0;            // most negative distance seen (>= 0 expected)
    double max_symmetry_gap = 0.0;        // |d(x,y) - d(y,x)|
    double max_triangle_violation = 0.0;  // max(0, d(x,z) - d(x,y) - d(y,z))
    double max_geodesic_gap = 0.0;        // |d(x_t1, x_t2) - |t1-t2|·d(x,y)|
    double max_interp_symmetry_gap = 0.0; // d(interp(x,y,t), interp(y,x,1-t))
    double min_defect = 0.0;
    double max_abs_defect = 0.0;

    bool metric_ok(double tol) const;
    bool cat0_ok(double tol) const { return min_defect >= -tol; }
    bool flat(double tol) const { return max_abs_defect <= tol; }
};

SpaceCheckReport check_space(const Space& space, int trials, std::uint64_t seed,
                             double box_radius = 10.0);

}  // namespace cat0
