#include "cat0/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cat0/error.hpp"
#include "cat0/geometry.hpp"
#include "cat0/rng.hpp"

namespace cat0 {

FrechetProblem FrechetProblem::make(Space space, std::vector<Point> points,
                                    std::vector<double> weights, int p) {
    if (points.empty()) throw InputError("FrechetProblem: needs at least one point");
    if (weights.size() != points.size())
        throw InputError("FrechetProblem: weights/points size mismatch");
    if (p != 1 && p != 2) throw UnsupportedError("FrechetProblem: p must be 1 or 2");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0 || !std::isfinite(w)) throw InputError("FrechetProblem: weights must be >= 0");
        sum += w;
    }
    if (sum <= 0.0) throw InputError("FrechetProblem: all-zero weight vector");
    for (double& w : weights) w /= sum;
    for (const Point& pt : points) require_in_space(space, pt, "FrechetProblem");
    FrechetProblem prob;
    prob.space = std::move(space);
    prob.points = std::move(points);
    prob.weights = std::move(weights);
    prob.p = p;
    return prob;
}

double frechet_objective(const FrechetProblem& problem, const Point& x) {
    require_in_space(problem.space, x, "frechet_objective");
    double s = 0.0;
    for (std::size_t i = 0; i < problem.points.size(); ++i) {
        const double d = dist(problem.space, x, problem.points[i]);
        s += problem.weights[i] * (problem.p == 2 ? d * d : d);
    }
    return s;
}

Point euclidean_mean(const FrechetProblem& problem) {
    if (!problem.space.is_euclidean())
        throw UnsupportedError("euclidean_mean: Euclidean spaces only");
    if (problem.p != 2) throw UnsupportedError("euclidean_mean: p = 2 only");
    const std::size_t d = static_cast<std::size_t>(problem.space.dim());
    std::vector<double> c(d, 0.0);
    for (std::size_t i = 0; i < problem.points.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            c[j] += problem.weights[i] * problem.points[i].coords()[j];
    return Point::euclidean(std::move(c));
}

SolverResult inductive_mean(const FrechetProblem& problem, int n_iters, std::uint64_t seed,
                            AnchorOrder order) {
    if (problem.p != 2) throw UnsupportedError("inductive_mean: p = 2 only");
    if (n_iters < 1) throw InputError("inductive_mean: n_iters >= 1 required");
    const std::size_t n = problem.points.size();
    Rng rng(seed);

    std::vector<double> cum(n, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += problem.weights[i];
        cum[i] = acc;
    }
    auto draw = [&]() {
        const double u = rng.uniform01();
        const auto it = std::lower_bound(cum.begin(), cum.end(), u);
        return std::min(n - 1, static_cast<std::size_t>(it - cum.begin()));
    };

    Point x = order == AnchorOrder::cycle ? problem.points[0] : problem.points[draw()];
    for (int k = 1; k <= n_iters; ++k) {
        const std::size_t anchor =
            order == AnchorOrder::cycle ? static_cast<std::size_t>(k) % n : draw();
        x = interpolate(problem.space, x, problem.points[anchor],
                        1.0 / static_cast<double>(k + 1));
    }

    SolverResult result;
    result.minimizer = x;
    result.objective = frechet_objective(problem, x);
    result.iterations = n_iters;
    result.method = order == AnchorOrder::cycle ? "inductive-cycle" : "inductive-random";
    return result;
}

namespace {

// Golden-section minimization of the objective along the geodesic from x
// toward the anchor; the objective is geodesically convex, so unimodal here.
std::pair<double, Point> refine_along(const FrechetProblem& problem, const Point& x,
                                      const Point& anchor, double fx) {
    static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    const Space& sp = problem.space;
    double a = 0.0, b = 1.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    Point pc = interpolate(sp, x, anchor, c);
    Point pd = interpolate(sp, x, anchor, d);
    double fc = frechet_objective(problem, pc);
    double fd = frechet_objective(problem, pd);
    double best_f = fx;
    Point best_p = x;
    for (int it = 0; it < 60; ++it) {
        if (fc < fd) {
            if (fc < best_f) {
                best_f = fc;
                best_p = pc;
            }
            b = d;
            d = c;
            fd = fc;
            pd = pc;
            c = b - inv_phi * (b - a);
            pc = interpolate(sp, x, anchor, c);
            fc = frechet_objective(problem, pc);
        } else {
            if (fd < best_f) {
                best_f = fd;
                best_p = pd;
            }
            a = c;
            c = d;
            fc = fd;
            pc = pd;
            d = a + inv_phi * (b - a);
            pd = interpolate(sp, x, anchor, d);
            fd = frechet_objective(problem, pd);
        }
    }
    return {best_f, best_p};
}

}  // namespace

SolverResult threading_search_mean(const FrechetProblem& problem, const SearchParams& params) {
    const PointCloud anchors = PointCloud::from_points(problem.space, problem.points,
                                                       params.hull.thread.dedup_eps);
    auto [hull, report] = convex_hull_cloud(anchors, params.hull);

    std::size_t best_idx = 0;
    double best_f = std::numeric_limits<double>::max();
    bool near_tie = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const double f = frechet_objective(problem, hull[i]);
        if (f < best_f - 1e-9) {
            best_f = f;
            best_idx = i;
            near_tie = false;
        } else if (f < best_f) {
            best_f = f;
            best_idx = i;
            near_tie = true;
        } else if (f <= best_f + 1e-9) {
            near_tie = true;
        }
    }

    Point best_p = hull[best_idx];
    for (int round = 0; round < params.refine_steps; ++round) {
        for (const Point& anchor : problem.points) {
            auto [f, p] = refine_along(problem, best_p, anchor, best_f);
            if (f < best_f) {
                best_f = f;
                best_p = p;
            }
        }
    }

    SolverResult result;
    result.minimizer = best_p;
    result.objective = best_f;
    result.iterations = static_cast<int>(report.iterations.size());
    result.method = "threading-search";
    NearestIndex idx(hull);
    result.certificate_distance = idx.distance(best_p);
    result.certificate_threshold = params.hull.eps + report.final_resolution;
    result.certificate_pass = *result.certificate_distance <= *result.certificate_threshold;
    result.near_tie = near_tie && problem.p == 1;
    result.degraded_accuracy = !report.stabilized;
    return result;
}

HullCertificate certify_in_hull(const FrechetProblem& problem, const Point& x, double eps,
                                const HullParams& params) {
    require_in_space(problem.space, x, "certify_in_hull");
    HullParams hp = params;
    hp.eps = eps;
    const PointCloud anchors = PointCloud::from_points(problem.space, problem.points,
                                                       hp.thread.dedup_eps);
    auto [hull, report] = convex_hull_cloud(anchors, hp);
    NearestIndex idx(hull);
    HullCertificate cert;
    cert.distance = idx.distance(x);
    cert.threshold = eps + report.final_resolution;
    cert.pass = cert.distance <= cert.threshold;
    cert.hull_stabilized = report.stabilized;
    return cert;
}

ProjectionCheckResult projection_inequality_check(const Space& space, const PointCloud& hull,
                                                  int n_samples, std::uint64_t seed, double tol,
                                                  double box_radius) {
    if (hull.empty()) throw InputError("projection_inequality_check: empty hull cloud");
    if (hull.space() != space)
        throw KindMismatchError("projection_inequality_check: space mismatch");
    Rng rng(seed);
    NearestIndex idx(hull);
    ProjectionCheckResult result;
    result.n_samples = n_samples;
    for (int i = 0; i < n_samples; ++i) {
        const Point x = sample_point(space, rng, box_radius);
        const Point& y = hull[rng.uniform_index(hull.size())];
        const auto [pi, dxp] = idx.nearest(x);
        const Point& px = hull[pi];
        const double dpy = dist(space, px, y);
        const double dxy = dist(space, x, y);
        const double violation = dxp * dxp + dpy * dpy - dxy * dxy;
        if (violation > result.worst_violation) {
            result.worst_violation = violation;
            result.witness_x = x;
        }
    }
    result.pass = result.worst_violation <= tol;
    return result;
}

}  // namespace cat0
