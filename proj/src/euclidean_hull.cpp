#include "cat0/euclidean_hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cat0/error.hpp"

namespace cat0 {

namespace {

// Gaussian elimination with partial pivoting; returns false when the system
// is numerically singular (affinely dependent subset — skipped by callers,
// smaller subsets span the same face).
bool solve_spd(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
        if (std::abs(a[piv * n + col]) < 1e-12) return false;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        double s = b[col];
        for (std::size_t c = col + 1; c < n; ++c) s -= a[col * n + c] * b[c];
        b[col] = s / a[col * n + col];
    }
    return true;
}

}  // namespace

double euclidean_hull_distance(const Space& space, const std::vector<Point>& points,
                               const Point& z) {
    if (!space.is_euclidean())
        throw UnsupportedError("euclidean_hull_distance: Euclidean spaces only");
    if (points.empty()) throw InputError("euclidean_hull_distance: empty point set");
    require_in_space(space, z, "euclidean_hull_distance");
    for (const Point& p : points) require_in_space(space, p, "euclidean_hull_distance");

    const std::size_t d = static_cast<std::size_t>(space.dim());
    const std::size_t m = points.size();
    const auto& zc = z.coords();

    double best = std::numeric_limits<double>::max();
    for (const Point& p : points) {
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += (p.coords()[j] - zc[j]) * (p.coords()[j] - zc[j]);
        best = std::min(best, std::sqrt(s));
    }

    const std::size_t kmax = std::min(m, d + 1);
    std::vector<std::size_t> idx;
    for (std::size_t k = 2; k <= kmax; ++k) {
        idx.resize(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        auto next_combination = [&]() {
            std::size_t i = k;
            while (i > 0) {
                --i;
                if (idx[i] != i + m - k) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            // Project z onto the affine hull of the subset via normal
            // equations in the edge basis around the first member.
            const auto& base = points[idx[0]].coords();
            const std::size_t n = k - 1;
            std::vector<double> gram(n * n, 0.0);
            std::vector<double> rhs(n, 0.0);
            for (std::size_t r = 0; r < n; ++r) {
                const auto& er = points[idx[r + 1]].coords();
                for (std::size_t c = r; c < n; ++c) {
                    const auto& ec = points[idx[c + 1]].coords();
                    double s = 0.0;
                    for (std::size_t j = 0; j < d; ++j)
                        s += (er[j] - base[j]) * (ec[j] - base[j]);
                    gram[r * n + c] = s;
                    gram[c * n + r] = s;
                }
                double s = 0.0;
                for (std::size_t j = 0; j < d; ++j) s += (er[j] - base[j]) * (zc[j] - base[j]);
                rhs[r] = s;
            }
            if (solve_spd(gram, rhs, n)) {
                double lambda0 = 1.0;
                bool admissible = true;
                for (std::size_t r = 0; r < n; ++r) {
                    lambda0 -= rhs[r];
                    if (rhs[r] < -1e-12) admissible = false;
                }
                if (lambda0 < -1e-12) admissible = false;
                if (admissible) {
                    double s = 0.0;
                    for (std::size_t j = 0; j < d; ++j) {
                        double pj = base[j];
                        for (std::size_t r = 0; r < n; ++r)
                            pj += rhs[r] * (points[idx[r + 1]].coords()[j] - base[j]);
                        s += (pj - zc[j]) * (pj - zc[j]);
                    }
                    best = std::min(best, std::sqrt(s));
                }
            }
        } while (next_combination());
    }
    return best;
}

bool euclidean_hull_membership(const Space& space, const std::vector<Point>& points,
                               const Point& z, double tol) {
    return euclidean_hull_distance(space, points, z) <= tol;
}

}  // namespace cat0
