#include "cat0/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cat0/error.hpp"
#include "cat0/geometry.hpp"

namespace cat0 {

std::vector<std::int32_t> farthest_point_order(const PointCloud& cloud) {
    return farthest_point_order_rows(cloud.embedding_dim(), cloud.embedded_rows(), cloud.size());
}

namespace {

double max_nearest_neighbor_distance(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n < 2) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double nn = std::numeric_limits<double>::max();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            nn = std::min(nn, dist(cloud.space(), cloud[i], cloud[j]));
        }
        worst = std::max(worst, nn);
    }
    return worst;
}

std::vector<std::size_t> geometric_prefix_sizes(std::size_t total, int n_steps) {
    std::vector<std::size_t> sizes;
    if (total == 0) return sizes;
    if (total == 1 || n_steps <= 1) {
        sizes.push_back(total);
        return sizes;
    }
    const double lo = 2.0;
    const double hi = static_cast<double>(total);
    for (int i = 0; i < n_steps; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(n_steps - 1);
        const double v = lo * std::pow(hi / lo, f);
        const std::size_t s = std::min(total, static_cast<std::size_t>(std::llround(v)));
        if (sizes.empty() || s > sizes.back()) sizes.push_back(s);
    }
    if (sizes.back() != total) sizes.push_back(total);
    return sizes;
}

}  // namespace

HullConvergenceReport increasing_hull_convergence(const PointCloud& target, int n_steps,
                                                  const HullParams& params) {
    if (target.empty()) throw InputError("increasing_hull_convergence: empty target");
    if (n_steps < 1) throw InputError("increasing_hull_convergence: n_steps >= 1 required");

    const auto order = farthest_point_order(target);
    HullConvergenceReport report;
    report.sampling_resolution = max_nearest_neighbor_distance(target);

    for (std::size_t prefix : geometric_prefix_sizes(target.size(), n_steps)) {
        PointCloud subset(target.space(), target.dedup_eps());
        for (std::size_t i = 0; i < prefix; ++i)
            subset.insert(target[static_cast<std::size_t>(order[i])]);
        auto [hull, hull_report] = convex_hull_cloud(subset, params);
        report.steps.push_back({prefix, hausdorff(hull, target, params.thread.threads)});
    }

    report.final_gap = report.steps.back().gap;
    report.reached_tolerance = report.final_gap <= 2.0 * report.sampling_resolution;
    for (std::size_t i = 2; i < report.steps.size(); ++i)
        if (report.steps[i].gap > report.steps[i - 1].gap)
            report.gaps_monotone_after_first = false;
    return report;
}

ChainLimitVerdict chain_limit_check(const std::vector<PointCloud>& chain, const PointCloud& limit,
                                    double tol) {
    if (chain.empty()) throw InputError("chain_limit_check: empty chain");
    for (const PointCloud& c : chain)
        if (c.space() != limit.space())
            throw KindMismatchError("chain_limit_check: chain/limit space mismatch");
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!cloud_subset(chain[i], chain[i + 1], tol))
            throw InputError("chain_limit_check: chain element " + std::to_string(i) +
                             " is not eps-contained in its successor");

    ChainLimitVerdict verdict;
    PointCloud prefix_union(limit.space(), chain.front().dedup_eps());
    for (const PointCloud& c : chain) {
        for (std::size_t i = 0; i < c.size(); ++i) prefix_union.insert(c[i]);
        verdict.gaps.push_back(hausdorff(prefix_union, limit));
    }
    for (std::size_t i = 1; i < verdict.gaps.size(); ++i)
        if (verdict.gaps[i] > verdict.gaps[i - 1] + 1e-12) verdict.nonincreasing = false;
    verdict.final_gap = verdict.gaps.back();
    verdict.pass = verdict.nonincreasing && verdict.final_gap <= tol;
    return verdict;
}

}  // namespace cat0
