#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cat0/cloud.hpp"
#include "cat0/isometry.hpp"

namespace cat0 {

struct ThreadParams {
    int grid_k = 33;
    std::size_t cap = 20000;
    double dedup_eps = 1e-6;
    std::uint64_t seed = 0;
    /// Upper bound on interpolants generated per iteration. When the full
    /// pair×grid expansion would exceed it, segment endpoints are drawn from
    /// a farthest-point generator subset of the iterate instead.
    std::size_t candidate_budget = 1'500'000;
    int threads = 1;
};

struct IterationRecord {
    int n = 0;              // 1-based iteration index
    std::size_t size = 0;   // |thr^n S| after dedup/cap
    double gap = 0.0;       // d_H(thr^n S, thr^{n-1} S)
    double resolution = 0.0;// grid resolution of the iterate the segments came from
    double millis = 0.0;
    bool cap_hit = false;
    std::size_t candidates = 0;
};

struct ThreadingReport {
    ThreadParams params;
    double eps = 0.0;  // stabilization eps when applicable, else 0
    std::vector<IterationRecord> iterations;
    bool stabilized = false;
    bool cap_influenced = false;
    bool gaps_monotone_after_first = true;  // empirical flag, never a failure
    double final_gap = 0.0;
    double final_resolution = 0.0;
};

struct HullParams {
    ThreadParams thread;
    double eps = 1e-2;
    int n_max = 8;
};

/// diameter(cloud) / (grid_k - 1): the spacing of the t-grid on the longest
/// possible segment. Exact diameter for small clouds, two-sweep estimate for
/// large ones.
double grid_resolution(const PointCloud& cloud, int grid_k);
double cloud_diameter(const PointCloud& cloud);

/// One threading step: dedup of all grid interpolants over point pairs, then
/// farthest-point capping. Input points always survive, so S ⊆ thr S holds
/// through capping; consequently an input at the cap is returned unchanged.
PointCloud thread_once(const PointCloud& cloud, const ThreadParams& params,
                       IterationRecord* record = nullptr);

/// Exact test for z ∈ thr S over a finite S: some pair (x, y) has
/// d(x,z) + d(z,y) <= d(x,y) + tol and z within tol of the geodesic point at
/// parameter d(x,z)/d(x,y). The second clause pins z to the segment; metric
/// betweenness alone leaves a transverse slack of order sqrt(tol·d(x,y)).
bool is_threading_member(const PointCloud& cloud, const Point& z, double tol);

std::pair<PointCloud, ThreadingReport> iterate_threading(const PointCloud& cloud, int n_iters,
                                                         const ThreadParams& params);

/// Iterates threading until d_H(thr^{n+1}S, thr^n S) <= eps or n_max is hit;
/// the final cloud approximates cl co S. Non-stabilization is reported, not
/// thrown.
std::pair<PointCloud, ThreadingReport> convex_hull_cloud(const PointCloud& cloud,
                                                         const HullParams& params);

struct DegreeEstimate {
    std::optional<int> degree;  // empty: not stabilized within n_max
    double gap = 0.0;           // gap at the stabilizing step
    double eps = 0.0;
    double resolution = 0.0;
    double threshold = 0.0;     // eps + resolution at the stabilizing step
    int n_max = 0;
    bool cap_influenced = false;
    ThreadingReport report;
};

/// Smallest n with d_H(thr^{n+1}S, thr^n S) <= eps + grid_resolution, the
/// discrete surrogate for deg_thr S. The resolution term is the floor below
/// which a convex iterate cannot be told from its threading on a finite grid.
DegreeEstimate estimate_degree(const PointCloud& cloud, const HullParams& params);

/// Eps-set operations used by the algebra checks.
PointCloud intersect_clouds(const PointCloud& a, const PointCloud& b, double tol);
PointCloud union_clouds(const PointCloud& a, const PointCloud& b);
bool cloud_subset(const PointCloud& a, const PointCloud& b, double tol);

struct AlgebraWitness {
    std::string clause;
    Point point;
};

struct AlgebraVerdict {
    bool pass = true;
    bool nested = false;        // s1 ⊆ s2 held, so the monotonicity clause ran
    std::size_t checks = 0;
    std::optional<AlgebraWitness> witness;
};

/// Verifies thr(S1∩S2) ⊆ thr S1 ∩ thr S2 and thr S1 ∪ thr S2 ⊆ thr(S1∪S2)
/// pointwise with the exact membership oracle; adds thr S1 ⊆ thr S2 when
/// S1 ⊆ S2. thr ∅ = ∅ by convention.
AlgebraVerdict thread_algebra_check(const PointCloud& s1, const PointCloud& s2,
                                    std::size_t n_samples, std::uint64_t seed, double tol,
                                    const ThreadParams& params);

PointCloud apply_isometry(const Isometry& phi, const PointCloud& cloud);

struct EquivarianceVerdict {
    bool pass = true;
    double max_gap = 0.0;
    std::vector<double> gaps;  // d_H(phi(thr^n S), thr^n(phi S)) per n
};

EquivarianceVerdict equivariance_check(const PointCloud& cloud, const Isometry& phi, int n_iters,
                                       const ThreadParams& params, double tol);

PointCloud product_cloud(const PointCloud& s1, const PointCloud& s2, double dedup_eps);

struct ProductRuleVerdict {
    DegreeEstimate product_degree;
    DegreeEstimate left_degree;
    DegreeEstimate right_degree;
    std::vector<double> gaps;         // d_H(thr^n(S1×S2), thr^n S1 × thr^n S2)
    std::vector<double> resolutions;  // per-iteration source grid resolution
    bool gaps_within_tol = true;      // gap_n <= 2·resolution_n per iteration
    bool max_rule_holds = false;      // product degree == max(factor degrees)
};

/// Runs both sides of the product identity for n_iters iterations and the
/// degree estimates for the product and the factors. The product side of the
/// comparison is the cross product of farthest-point subsamples of the
/// factor iterates (factor_cap each) to keep the comparison cloud bounded.
ProductRuleVerdict product_rule_check(const PointCloud& s1, const PointCloud& s2, int n_iters,
                                      const HullParams& params, std::size_t factor_cap = 1200);

}  // namespace cat0
