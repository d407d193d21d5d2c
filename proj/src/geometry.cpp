#include "cat0/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cat0/error.hpp"

namespace cat0 {

namespace {

double sq(double v) { return v * v; }

double euclidean_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += sq(a[i] - b[i]);
    return std::sqrt(s);
}

double norm2(const std::array<double, 2>& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1]); }

bool same_quadrant(const Point& x, const Point& y) { return x.quadrant() == y.quadrant(); }

Point scale_biquadrant(const Point& p, double factor) {
    // Shrinking toward the origin; clamp so rounding never flips a sign.
    factor = std::max(0.0, factor);
    return Point::biquadrant(p.quadrant(), p.xy()[0] * factor, p.xy()[1] * factor);
}

}  // namespace

double dist(const Space& space, const Point& x, const Point& y) {
    require_in_space(space, x, "dist");
    require_in_space(space, y, "dist");
    switch (space.kind()) {
        case SpaceKind::euclidean:
            return euclidean_dist(x.coords(), y.coords());
        case SpaceKind::biquadrant: {
            if (same_quadrant(x, y)) {
                return std::sqrt(sq(x.xy()[0] - y.xy()[0]) + sq(x.xy()[1] - y.xy()[1]));
            }
            return norm2(x.xy()) + norm2(y.xy());
        }
        case SpaceKind::product: {
            const double dl = dist(space.left(), x.left(), y.left());
            const double dr = dist(space.right(), x.right(), y.right());
            return std::sqrt(dl * dl + dr * dr);
        }
    }
    return 0.0;
}

Point interpolate(const Space& space, const Point& x, const Point& y, double t) {
    require_in_space(space, x, "interpolate");
    require_in_space(space, y, "interpolate");
    if (t < 0.0 || t > 1.0) throw InputError("interpolate: t outside [0, 1]");
    switch (space.kind()) {
        case SpaceKind::euclidean: {
            const auto& a = x.coords();
            const auto& b = y.coords();
            std::vector<double> c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) c[i] = (1.0 - t) * a[i] + t * b[i];
            return Point::euclidean(std::move(c));
        }
        case SpaceKind::biquadrant: {
            if (same_quadrant(x, y)) {
                return Point::biquadrant(x.quadrant(), (1.0 - t) * x.xy()[0] + t * y.xy()[0],
                                         (1.0 - t) * x.xy()[1] + t * y.xy()[1]);
            }
            // Broken segment x -> origin -> y walked by arc length.
            const double nx = norm2(x.xy());
            const double ny = norm2(y.xy());
            const double total = nx + ny;
            if (total == 0.0) return x;
            const double s = t * total;
            if (s <= nx) {
                if (nx == 0.0) return scale_biquadrant(y, 0.0);
                return scale_biquadrant(x, 1.0 - s / nx);
            }
            if (ny == 0.0) return scale_biquadrant(x, 0.0);
            return scale_biquadrant(y, (s - nx) / ny);
        }
        case SpaceKind::product:
            return Point::product(interpolate(space.left(), x.left(), y.left(), t),
                                  interpolate(space.right(), x.right(), y.right(), t));
    }
    return x;
}

double cat0_defect(const Space& space, const Point& x, const Point& y, const Point& z, double t) {
    if (t < 0.0 || t > 1.0) throw InputError("cat0_defect: t outside [0, 1]");
    const double dxz = dist(space, x, z);
    const double dyz = dist(space, y, z);
    const double dxy = dist(space, x, y);
    const Point xt = interpolate(space, x, y, t);
    const double dxtz = dist(space, xt, z);
    return (1.0 - t) * dxz * dxz + t * dyz * dyz - t * (1.0 - t) * dxy * dxy - dxtz * dxtz;
}

Point sample_point(const Space& space, Rng& rng, double box_radius) {
    switch (space.kind()) {
        case SpaceKind::euclidean: {
            std::vector<double> c(static_cast<std::size_t>(space.dim()));
            for (auto& v : c) v = rng.uniform(-box_radius, box_radius);
            return Point::euclidean(std::move(c));
        }
        case SpaceKind::biquadrant: {
            const bool plus = rng.coin();
            const double a = rng.uniform(0.0, box_radius);
            const double b = rng.uniform(0.0, box_radius);
            return plus ? Point::biquadrant(Quadrant::plus, a, b)
                        : Point::biquadrant(Quadrant::minus, -a, -b);
        }
        case SpaceKind::product: {
            Point l = sample_point(space.left(), rng, box_radius);
            Point r = sample_point(space.right(), rng, box_radius);
            return Point::product(std::move(l), std::move(r));
        }
    }
    throw InputError("sample_point: unknown space kind");
}

FlatnessVerdict is_flat_sample(const Space& space, int n_samples, std::uint64_t seed,
                               double tol, double box_radius) {
    if (n_samples < 1) throw InputError("is_flat_sample: n_samples >= 1 required");
    Rng rng(seed);
    FlatnessVerdict v;
    v.min_defect = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        Point x = sample_point(space, rng, box_radius);
        Point y = sample_point(space, rng, box_radius);
        Point z = sample_point(space, rng, box_radius);
        const double t = rng.uniform01();
        const double d = cat0_defect(space, x, y, z, t);
        v.min_defect = std::min(v.min_defect, d);
        if (std::abs(d) > v.max_abs_defect) {
            v.max_abs_defect = std::abs(d);
            if (std::abs(d) > tol) v.witness = DefectWitness{x, y, z, t, d};
        }
    }
    v.flat = v.max_abs_defect <= tol;
    if (v.flat) v.witness.reset();
    return v;
}

bool SpaceCheckReport::metric_ok(double tol) const {
    return min_distance >= 0.0 && max_symmetry_gap <= 1e-12 && max_triangle_violation <= tol &&
           max_geodesic_gap <= tol && max_interp_symmetry_gap <= tol;
}

SpaceCheckReport check_space(const Space& space, int trials, std::uint64_t seed,
                             double box_radius) {
    if (trials < 1) throw InputError("check_space: trials >= 1 required");
    Rng rng(seed);
    SpaceCheckReport r;
    r.trials = trials;
    r.seed = seed;
    r.box_radius = box_radius;
    for (int i = 0; i < trials; ++i) {
        Point x = sample_point(space, rng, box_radius);
        Point y = sample_point(space, rng, box_radius);
        Point z = sample_point(space, rng, box_radius);
        const double t1 = rng.uniform01();
        const double t2 = rng.uniform01();

        const double dxy = dist(space, x, y);
        const double dyx = dist(space, y, x);
        const double dxz = dist(space, x, z);
        const double dyz = dist(space, y, z);
        r.min_distance = std::min({r.min_distance, dxy, dxz, dyz});
        r.max_symmetry_gap = std::max(r.max_symmetry_gap, std::abs(dxy - dyx));
        r.max_triangle_violation = std::max(r.max_triangle_violation, dxz - dxy - dyz);

        const Point a = interpolate(space, x, y, t1);
        const Point b = interpolate(space, x, y, t2);
        r.max_geodesic_gap =
            std::max(r.max_geodesic_gap, std::abs(dist(space, a, b) - std::abs(t1 - t2) * dxy));
        r.max_interp_symmetry_gap = std::max(
            r.max_interp_symmetry_gap, dist(space, a, interpolate(space, y, x, 1.0 - t1)));

        const double defect = cat0_defect(space, x, y, z, t1);
        r.min_defect = std::min(r.min_defect, defect);
        r.max_abs_defect = std::max(r.max_abs_defect, std::abs(defect));
    }
    return r;
}

}  // namespace cat0
