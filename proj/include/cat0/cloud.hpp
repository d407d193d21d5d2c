#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "cat0/point.hpp"
#include "cat0/space.hpp"

namespace cat0 {

namespace detail {

/// Sparse uniform grid over embedded coordinates. Hash collisions between
/// distinct cells are tolerated: every caller verifies real distances.
class HashGrid {
public:
    HashGrid(int dim, double cell) : dim_(dim), cell_(cell > 0.0 ? cell : 1.0) {}

    double cell() const { return cell_; }
    bool empty() const { return cells_.empty(); }

    std::vector<std::int64_t> cell_of(std::span<const double> coords) const;
    void add(std::span<const double> coords, std::int32_t index);

    /// Calls f(index) for every point stored in cells at Chebyshev radius
    /// exactly r from `center` (r = 0 means the center cell alone).
    template <typename F>
    void visit_shell(const std::vector<std::int64_t>& center, std::int64_t r, F&& f) const {
        const std::size_t d = static_cast<std::size_t>(dim_);
        std::vector<std::int64_t> offset(d, -r);
        std::vector<std::int64_t> cell(d);
        for (;;) {
            bool on_shell = (r == 0);
            for (std::size_t i = 0; i < d && !on_shell; ++i)
                if (offset[i] == -r || offset[i] == r) on_shell = true;
            if (on_shell) {
                for (std::size_t i = 0; i < d; ++i) cell[i] = center[i] + offset[i];
                auto it = cells_.find(hash_cell(cell));
                if (it != cells_.end())
                    for (std::int32_t idx : it->second) f(idx);
            }
            std::size_t i = 0;
            for (; i < d; ++i) {
                if (++offset[i] <= r) break;
                offset[i] = -r;
            }
            if (i == d) return;
        }
    }

    /// Calls f(index) for everything in the 3^dim neighborhood of coords.
    template <typename F>
    void visit_neighborhood(std::span<const double> coords, F&& f) const {
        const auto center = cell_of(coords);
        visit_shell(center, 0, f);
        visit_shell(center, 1, f);
    }

private:
    static std::uint64_t hash_cell(const std::vector<std::int64_t>& cell);

    int dim_;
    double cell_;
    std::unordered_map<std::uint64_t, std::vector<std::int32_t>> cells_;
};

}  // namespace detail

/// Finite deduplicated point set of one space; the computational stand-in
/// for a set. Insertion order is preserved; a new point within dedup_eps
/// (intrinsic metric) of a stored one is merged into it, first point wins.
class PointCloud {
public:
    PointCloud(Space space, double dedup_eps);
    static PointCloud from_points(const Space& space, const std::vector<Point>& pts,
                                  double dedup_eps);

    /// Returns false when p was merged into an existing point.
    bool insert(const Point& p);

    const Space& space() const { return space_; }
    double dedup_eps() const { return dedup_eps_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }

    int embedding_dim() const { return emb_dim_; }
    std::span<const double> embedded(std::size_t i) const {
        return {emb_.data() + i * static_cast<std::size_t>(emb_dim_),
                static_cast<std::size_t>(emb_dim_)};
    }
    const std::vector<double>& embedded_rows() const { return emb_; }

private:
    Space space_;
    double dedup_eps_;
    int emb_dim_;
    std::vector<Point> pts_;
    std::vector<double> emb_;
    detail::HashGrid grid_;
};

/// Exact nearest neighbor in the intrinsic metric, accelerated by an
/// embedded-coordinate grid (embedded distance never exceeds the intrinsic
/// one, so cell bounds are valid pruning bounds).
class NearestIndex {
public:
    explicit NearestIndex(const PointCloud& cloud);

    /// (index, intrinsic distance) of the closest cloud point; lowest index
    /// wins ties. Cloud must be nonempty.
    std::pair<std::size_t, double> nearest(const Point& q) const;
    double distance(const Point& q) const { return nearest(q).second; }

    const PointCloud& cloud() const { return *cloud_; }

private:
    const PointCloud* cloud_;
    detail::HashGrid grid_;
    std::vector<std::int64_t> lo_cell_, hi_cell_;
};

/// Greedy farthest-point subsample over embedded coordinates. The first
/// `protect` rows are always kept; additional rows are chosen farthest-first
/// until `cap` rows are selected (ties: lowest index). With protect = 0 the
/// first pick is the row farthest from the centroid. Returns kept indices,
/// protected rows first in original order, then selections in pick order.
std::vector<std::int32_t> farthest_point_subsample(int emb_dim, const std::vector<double>& rows,
                                                   std::size_t n, std::size_t protect,
                                                   std::size_t cap);

/// Full greedy farthest-point ordering (subsample with cap = n, never
/// short-circuited).
std::vector<std::int32_t> farthest_point_order_rows(int emb_dim, const std::vector<double>& rows,
                                                    std::size_t n);

/// max over both one-sided excesses, exact in the intrinsic metric.
/// Both clouds must be nonempty and share a space.
double hausdorff(const PointCloud& a, const PointCloud& b, int threads = 1);

/// One-sided excess sup_{a in A} d(a, B).
double hausdorff_excess(const PointCloud& a, const PointCloud& b, int threads = 1);

}  // namespace cat0
