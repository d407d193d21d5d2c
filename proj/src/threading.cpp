#include "cat0/threading.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "cat0/error.hpp"
#include "cat0/geometry.hpp"
#include "cat0/rng.hpp"

namespace cat0 {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void update_monotone_flag(ThreadingReport& report) {
    report.gaps_monotone_after_first = true;
    for (std::size_t i = 2; i < report.iterations.size(); ++i)
        if (report.iterations[i].gap > report.iterations[i - 1].gap)
            report.gaps_monotone_after_first = false;
}

}  // namespace

double cloud_diameter(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n < 2) return 0.0;
    const Space& sp = cloud.space();
    if (n <= 2048) {
        double diam = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                diam = std::max(diam, dist(sp, cloud[i], cloud[j]));
        return diam;
    }
    // Two-sweep estimate; within a factor 2 of the truth, deterministic.
    std::size_t far = 0;
    double r0 = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = dist(sp, cloud[0], cloud[i]);
        if (d > r0) {
            r0 = d;
            far = i;
        }
    }
    double r1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r1 = std::max(r1, dist(sp, cloud[far], cloud[i]));
    return std::max(r0, r1);
}

double grid_resolution(const PointCloud& cloud, int grid_k) {
    if (grid_k < 2) throw InputError("grid_resolution: grid_k >= 2 required");
    return cloud_diameter(cloud) / static_cast<double>(grid_k - 1);
}

PointCloud thread_once(const PointCloud& cloud, const ThreadParams& params,
                       IterationRecord* record) {
    if (cloud.empty()) throw InputError("thread_once: empty cloud");
    if (params.grid_k < 2) throw InputError("thread_once: grid_k >= 2 required");
    if (params.cap < 1) throw InputError("thread_once: cap >= 1 required");
    const auto t0 = Clock::now();
    const Space& sp = cloud.space();
    const std::size_t n = cloud.size();

    // All input points survive capping, so an iterate at the cap is a fixed
    // point of this operator.
    if (n >= params.cap) {
        if (record) {
            record->size = n;
            record->cap_hit = true;
            record->candidates = 0;
            record->millis = ms_since(t0);
        }
        return cloud;
    }

    const std::size_t k = static_cast<std::size_t>(params.grid_k);
    std::vector<std::size_t> gen(n);
    for (std::size_t i = 0; i < n; ++i) gen[i] = i;
    if (n * (n + 1) / 2 * k > params.candidate_budget) {
        std::size_t g = 2;
        while ((g + 1) * (g + 2) / 2 * k <= params.candidate_budget) ++g;
        g = std::min(g, n);
        const auto kept = farthest_point_subsample(cloud.embedding_dim(), cloud.embedded_rows(),
                                                   n, 0, g);
        gen.assign(kept.begin(), kept.end());
        std::sort(gen.begin(), gen.end());
    }

    PointCloud out(sp, params.dedup_eps);
    std::size_t n_protected = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (out.insert(cloud[i])) ++n_protected;

    std::size_t candidates = 0;
    const double denom = static_cast<double>(params.grid_k - 1);
    for (std::size_t a = 0; a < gen.size(); ++a) {
        for (std::size_t b = a + 1; b < gen.size(); ++b) {
            const Point& x = cloud[gen[a]];
            const Point& y = cloud[gen[b]];
            for (std::size_t j = 1; j + 1 < k; ++j) {
                out.insert(interpolate(sp, x, y, static_cast<double>(j) / denom));
                ++candidates;
            }
        }
    }

    bool cap_hit = false;
    if (out.size() > params.cap) {
        cap_hit = true;
        const auto kept = farthest_point_subsample(out.embedding_dim(), out.embedded_rows(),
                                                   out.size(), n_protected, params.cap);
        PointCloud capped(sp, params.dedup_eps);
        for (std::int32_t idx : kept) capped.insert(out[static_cast<std::size_t>(idx)]);
        out = std::move(capped);
    }

    if (record) {
        record->size = out.size();
        record->cap_hit = cap_hit;
        record->candidates = candidates;
        record->millis = ms_since(t0);
    }
    return out;
}

bool is_threading_member(const PointCloud& cloud, const Point& z, double tol) {
    require_in_space(cloud.space(), z, "is_threading_member");
    const Space& sp = cloud.space();
    const std::size_t n = cloud.size();
    std::vector<double> dz(n);
    for (std::size_t i = 0; i < n; ++i) {
        dz[i] = dist(sp, cloud[i], z);
        if (dz[i] <= tol) return true;  // degenerate segment [x, x]
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dxy = dist(sp, cloud[i], cloud[j]);
            if (dz[i] + dz[j] > dxy + tol) continue;
            if (dxy == 0.0) continue;  // dz[i] > tol was already ruled out above
            const double t = std::clamp(dz[i] / dxy, 0.0, 1.0);
            if (dist(sp, interpolate(sp, cloud[i], cloud[j], t), z) <= tol) return true;
        }
    }
    return false;
}

namespace {

struct ChainResult {
    PointCloud cloud;
    ThreadingReport report;
    std::optional<int> stable_n;  // smallest n with gap_n <= threshold(n)
    double stable_gap = 0.0;
    double stable_resolution = 0.0;
};

// Shared chain driver. Gap at step n compares thr^n to thr^{n-1}; the
// stabilization threshold is eps (+ the grid resolution of the source
// iterate when use_resolution is set).
ChainResult run_chain(const PointCloud& start, int max_iters, const ThreadParams& params,
                      double eps, bool stop_at_eps, bool use_resolution) {
    ChainResult res{start, {}, std::nullopt, 0.0, 0.0};
    res.report.params = params;
    res.report.eps = stop_at_eps ? eps : 0.0;
    for (int n = 1; n <= max_iters; ++n) {
        const double resolution = grid_resolution(res.cloud, params.grid_k);
        IterationRecord rec;
        rec.n = n;
        rec.resolution = resolution;
        PointCloud next = thread_once(res.cloud, params, &rec);
        rec.gap = hausdorff(next, res.cloud, params.threads);
        res.report.iterations.push_back(rec);
        res.report.cap_influenced = res.report.cap_influenced || rec.cap_hit;
        res.report.final_gap = rec.gap;
        res.cloud = std::move(next);
        const double threshold = use_resolution ? eps + resolution : eps;
        if (!res.stable_n && rec.gap <= threshold) {
            res.stable_n = n - 1;  // gap_n certifies thr^{n-1} as stable
            res.stable_gap = rec.gap;
            res.stable_resolution = resolution;
            if (stop_at_eps) break;
        }
    }
    res.report.stabilized = res.stable_n.has_value();
    res.report.final_resolution = grid_resolution(res.cloud, params.grid_k);
    update_monotone_flag(res.report);
    return res;
}

}  // namespace

std::pair<PointCloud, ThreadingReport> iterate_threading(const PointCloud& cloud, int n_iters,
                                                         const ThreadParams& params) {
    if (n_iters < 0) throw InputError("iterate_threading: n_iters >= 0 required");
    if (cloud.empty()) throw InputError("iterate_threading: empty cloud");
    if (n_iters == 0) {
        ThreadingReport report;
        report.params = params;
        report.final_resolution = grid_resolution(cloud, params.grid_k);
        return {cloud, report};
    }
    ChainResult res = run_chain(cloud, n_iters, params, 0.0, false, false);
    res.report.stabilized = false;
    return {std::move(res.cloud), std::move(res.report)};
}

std::pair<PointCloud, ThreadingReport> convex_hull_cloud(const PointCloud& cloud,
                                                         const HullParams& params) {
    if (params.eps <= 0.0) throw InputError("convex_hull_cloud: eps > 0 required");
    if (cloud.empty()) throw InputError("convex_hull_cloud: empty cloud");
    ChainResult res = run_chain(cloud, params.n_max, params.thread, params.eps, true, false);
    return {std::move(res.cloud), std::move(res.report)};
}

DegreeEstimate estimate_degree(const PointCloud& cloud, const HullParams& params) {
    if (params.eps <= 0.0) throw InputError("estimate_degree: eps > 0 required");
    if (cloud.empty()) throw InputError("estimate_degree: empty cloud");
    ChainResult res = run_chain(cloud, params.n_max, params.thread, params.eps, true, true);
    DegreeEstimate est;
    est.degree = res.stable_n;
    est.gap = res.stable_gap;
    est.eps = params.eps;
    est.resolution = res.stable_resolution;
    est.threshold = params.eps + res.stable_resolution;
    est.n_max = params.n_max;
    est.cap_influenced = res.report.cap_influenced;
    est.report = std::move(res.report);
    return est;
}

PointCloud intersect_clouds(const PointCloud& a, const PointCloud& b, double tol) {
    if (a.space() != b.space()) throw KindMismatchError("intersect_clouds: different spaces");
    PointCloud out(a.space(), a.dedup_eps());
    if (a.empty() || b.empty()) return out;
    NearestIndex bidx(b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (bidx.distance(a[i]) <= tol) out.insert(a[i]);
    return out;
}

PointCloud union_clouds(const PointCloud& a, const PointCloud& b) {
    if (a.space() != b.space()) throw KindMismatchError("union_clouds: different spaces");
    PointCloud out(a.space(), a.dedup_eps());
    for (std::size_t i = 0; i < a.size(); ++i) out.insert(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) out.insert(b[i]);
    return out;
}

bool cloud_subset(const PointCloud& a, const PointCloud& b, double tol) {
    if (a.space() != b.space()) throw KindMismatchError("cloud_subset: different spaces");
    if (a.empty()) return true;
    if (b.empty()) return false;
    NearestIndex bidx(b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (bidx.distance(a[i]) > tol) return false;
    return true;
}

AlgebraVerdict thread_algebra_check(const PointCloud& s1, const PointCloud& s2,
                                    std::size_t n_samples, std::uint64_t seed, double tol,
                                    const ThreadParams& params) {
    if (s1.space() != s2.space())
        throw KindMismatchError("thread_algebra_check: different spaces");
    AlgebraVerdict verdict;
    Rng rng(seed);

    auto sample_indices = [&](std::size_t n) {
        std::vector<std::size_t> idx;
        if (n <= n_samples) {
            idx.resize(n);
            for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        } else {
            idx.reserve(n_samples);
            for (std::size_t i = 0; i < n_samples; ++i) idx.push_back(rng.uniform_index(n));
        }
        return idx;
    };
    auto check_members = [&](const PointCloud& thr_cloud,
                             const std::vector<const PointCloud*>& bases, const char* clause) {
        if (!verdict.pass) return;
        for (std::size_t i : sample_indices(thr_cloud.size())) {
            for (const PointCloud* base : bases) {
                ++verdict.checks;
                if (!is_threading_member(*base, thr_cloud[i], tol)) {
                    verdict.pass = false;
                    verdict.witness = AlgebraWitness{clause, thr_cloud[i]};
                    return;
                }
            }
        }
    };

    const PointCloud inter = intersect_clouds(s1, s2, tol);
    const PointCloud uni = union_clouds(s1, s2);

    // thr ∅ = ∅: nothing to check on an empty intersection.
    if (!inter.empty()) {
        const PointCloud thr_inter = thread_once(inter, params);
        check_members(thr_inter, {&s1, &s2}, "thr(S1∩S2) ⊆ thr S1 ∩ thr S2");
    }
    const PointCloud thr1 = thread_once(s1, params);
    const PointCloud thr2 = thread_once(s2, params);
    check_members(thr1, {&uni}, "thr S1 ⊆ thr(S1∪S2)");
    check_members(thr2, {&uni}, "thr S2 ⊆ thr(S1∪S2)");

    if (cloud_subset(s1, s2, tol)) {
        verdict.nested = true;
        check_members(thr1, {&s2}, "S1 ⊆ S2 ⟹ thr S1 ⊆ thr S2");
    }
    return verdict;
}

PointCloud apply_isometry(const Isometry& phi, const PointCloud& cloud) {
    if (phi.space() != cloud.space())
        throw KindMismatchError("apply_isometry: isometry and cloud live in different spaces");
    PointCloud out(cloud.space(), cloud.dedup_eps());
    for (std::size_t i = 0; i < cloud.size(); ++i) out.insert(phi.apply(cloud[i]));
    return out;
}

EquivarianceVerdict equivariance_check(const PointCloud& cloud, const Isometry& phi, int n_iters,
                                       const ThreadParams& params, double tol) {
    if (n_iters < 1) throw InputError("equivariance_check: n_iters >= 1 required");
    EquivarianceVerdict verdict;
    PointCloud a = cloud;
    PointCloud b = apply_isometry(phi, cloud);
    for (int n = 1; n <= n_iters; ++n) {
        a = thread_once(a, params);
        b = thread_once(b, params);
        const double gap = hausdorff(apply_isometry(phi, a), b, params.threads);
        verdict.gaps.push_back(gap);
        verdict.max_gap = std::max(verdict.max_gap, gap);
    }
    verdict.pass = verdict.max_gap <= tol;
    return verdict;
}

PointCloud product_cloud(const PointCloud& s1, const PointCloud& s2, double dedup_eps) {
    PointCloud out(Space::product(s1.space(), s2.space()), dedup_eps);
    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = 0; j < s2.size(); ++j) out.insert(Point::product(s1[i], s2[j]));
    return out;
}

namespace {

PointCloud fps_reduce(const PointCloud& cloud, std::size_t cap) {
    if (cloud.size() <= cap) return cloud;
    const auto kept = farthest_point_subsample(cloud.embedding_dim(), cloud.embedded_rows(),
                                               cloud.size(), 0, cap);
    PointCloud out(cloud.space(), cloud.dedup_eps());
    for (std::int32_t idx : kept) out.insert(cloud[static_cast<std::size_t>(idx)]);
    return out;
}

}  // namespace

ProductRuleVerdict product_rule_check(const PointCloud& s1, const PointCloud& s2, int n_iters,
                                      const HullParams& params, std::size_t factor_cap) {
    if (s1.empty() || s2.empty()) throw InputError("product_rule_check: empty factor cloud");
    ProductRuleVerdict verdict;
    const double dedup = params.thread.dedup_eps;

    PointCloud prod = product_cloud(s1, s2, dedup);
    PointCloud f1 = s1;
    PointCloud f2 = s2;
    for (int n = 1; n <= n_iters; ++n) {
        verdict.resolutions.push_back(grid_resolution(prod, params.thread.grid_k));
        prod = thread_once(prod, params.thread);
        f1 = thread_once(f1, params.thread);
        f2 = thread_once(f2, params.thread);
        const PointCloud rhs = product_cloud(fps_reduce(f1, factor_cap),
                                             fps_reduce(f2, factor_cap), dedup);
        const double gap = hausdorff(prod, rhs, params.thread.threads);
        verdict.gaps.push_back(gap);
        if (gap > 2.0 * verdict.resolutions.back()) verdict.gaps_within_tol = false;
    }

    verdict.product_degree = estimate_degree(product_cloud(s1, s2, dedup), params);
    verdict.left_degree = estimate_degree(s1, params);
    verdict.right_degree = estimate_degree(s2, params);
    if (verdict.product_degree.degree && verdict.left_degree.degree &&
        verdict.right_degree.degree) {
        verdict.max_rule_holds = *verdict.product_degree.degree ==
                                 std::max(*verdict.left_degree.degree, *verdict.right_degree.degree);
    }
    return verdict;
}

}  // namespace cat0
