#include "cat0/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <thread>

#include "cat0/error.hpp"
#include "cat0/geometry.hpp"

namespace cat0 {

namespace detail {

std::vector<std::int64_t> HashGrid::cell_of(std::span<const double> coords) const {
    std::vector<std::int64_t> cell(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        cell[i] = static_cast<std::int64_t>(std::floor(coords[i] / cell_));
    return cell;
}

void HashGrid::add(std::span<const double> coords, std::int32_t index) {
    cells_[hash_cell(cell_of(coords))].push_back(index);
}

std::uint64_t HashGrid::hash_cell(const std::vector<std::int64_t>& cell) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::int64_t c : cell) {
        std::uint64_t x = static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull + h;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        h = x ^ (x >> 31);
    }
    return h;
}

}  // namespace detail

PointCloud::PointCloud(Space space, double dedup_eps)
    : space_(std::move(space)),
      dedup_eps_(dedup_eps),
      emb_dim_(space_.embedding_dim()),
      grid_(emb_dim_, dedup_eps > 0.0 ? dedup_eps : 1e-12) {
    if (dedup_eps < 0.0) throw InputError("PointCloud: dedup_eps must be >= 0");
}

PointCloud PointCloud::from_points(const Space& space, const std::vector<Point>& pts,
                                   double dedup_eps) {
    PointCloud c(space, dedup_eps);
    for (const Point& p : pts) c.insert(p);
    return c;
}

bool PointCloud::insert(const Point& p) {
    require_in_space(space_, p, "PointCloud::insert");
    thread_local std::vector<double> emb;
    emb.clear();
    p.embed(emb);
    // Any stored point within dedup_eps intrinsically is within dedup_eps in
    // every embedded coordinate, hence inside the 3^m neighborhood.
    bool merged = false;
    grid_.visit_neighborhood(emb, [&](std::int32_t idx) {
        if (merged) return;
        if (dist(space_, pts_[static_cast<std::size_t>(idx)], p) <= dedup_eps_) merged = true;
    });
    if (merged) return false;
    grid_.add(emb, static_cast<std::int32_t>(pts_.size()));
    pts_.push_back(p);
    emb_.insert(emb_.end(), emb.begin(), emb.end());
    return true;
}

namespace {

// Grid resolution adapted to the cloud size so shell scans stay short.
double pick_cell(double diag, std::size_t n, int m) {
    if (diag <= 0.0) return 1.0;
    const double per_axis = std::clamp(2.0 * std::pow(static_cast<double>(n), 1.0 / m), 16.0, 256.0);
    return diag / per_axis;
}

}  // namespace

NearestIndex::NearestIndex(const PointCloud& cloud)
    : cloud_(&cloud), grid_(cloud.embedding_dim(), 1.0) {
    if (cloud.empty()) throw InputError("NearestIndex: empty cloud");
    const int m = cloud.embedding_dim();
    std::vector<double> lo(static_cast<std::size_t>(m), std::numeric_limits<double>::max());
    std::vector<double> hi(static_cast<std::size_t>(m), std::numeric_limits<double>::lowest());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto r = cloud.embedded(i);
        for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) {
            lo[j] = std::min(lo[j], r[j]);
            hi[j] = std::max(hi[j], r[j]);
        }
    }
    double diag = 0.0;
    for (std::size_t j = 0; j < static_cast<std::size_t>(m); ++j) diag += (hi[j] - lo[j]) * (hi[j] - lo[j]);
    diag = std::sqrt(diag);
    grid_ = detail::HashGrid(m, pick_cell(diag, cloud.size(), m));
    for (std::size_t i = 0; i < cloud.size(); ++i)
        grid_.add(cloud.embedded(i), static_cast<std::int32_t>(i));
    lo_cell_ = grid_.cell_of(lo);
    hi_cell_ = grid_.cell_of(hi);
}

std::pair<std::size_t, double> NearestIndex::nearest(const Point& q) const {
    require_in_space(cloud_->space(), q, "NearestIndex::nearest");
    std::vector<double> emb;
    q.embed(emb);
    const auto center = grid_.cell_of(emb);

    // Shells closer than the bounding box hold no points; skip them.
    std::int64_t start = 0;
    std::int64_t max_r = 1;
    for (std::size_t j = 0; j < center.size(); ++j) {
        std::int64_t gap = 0;
        if (center[j] < lo_cell_[j]) gap = lo_cell_[j] - center[j];
        else if (center[j] > hi_cell_[j]) gap = center[j] - hi_cell_[j];
        start = std::max(start, gap > 0 ? gap - 1 : 0);
        max_r = std::max({max_r, std::abs(center[j] - lo_cell_[j]) + 1,
                          std::abs(center[j] - hi_cell_[j]) + 1});
    }

    std::size_t best_idx = 0;
    double best = std::numeric_limits<double>::max();
    bool found = false;
    const double cell = grid_.cell();
    for (std::int64_t r = start; r <= max_r; ++r) {
        // A point in a cell at Chebyshev radius r sits at embedded distance
        // >= (r-1)·cell, and intrinsic >= embedded.
        if (found && static_cast<double>(r - 1) * cell > best) break;
        grid_.visit_shell(center, r, [&](std::int32_t idx) {
            const std::size_t i = static_cast<std::size_t>(idx);
            const double d = dist(cloud_->space(), (*cloud_)[i], q);
            if (!found || d < best || (d == best && i < best_idx)) {
                best = d;
                best_idx = i;
                found = true;
            }
        });
    }
    return {best_idx, best};
}

namespace {

std::vector<std::int32_t> fps_impl(int emb_dim, const std::vector<double>& rows, std::size_t n,
                                   std::size_t protect, std::size_t cap, bool force_order) {
    const std::size_t m = static_cast<std::size_t>(emb_dim);
    std::vector<std::int32_t> kept;
    if (!force_order && (n <= cap || protect >= cap)) {
        const std::size_t upto = n <= cap ? n : protect;
        kept.reserve(upto);
        for (std::size_t i = 0; i < upto; ++i) kept.push_back(static_cast<std::int32_t>(i));
        return kept;
    }

    std::vector<double> lo(m, std::numeric_limits<double>::max());
    std::vector<double> hi(m, std::numeric_limits<double>::lowest());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            lo[j] = std::min(lo[j], rows[i * m + j]);
            hi[j] = std::max(hi[j], rows[i * m + j]);
        }
    double diag = 0.0;
    for (std::size_t j = 0; j < m; ++j) diag += (hi[j] - lo[j]) * (hi[j] - lo[j]);
    diag = std::sqrt(diag);
    detail::HashGrid grid(emb_dim, diag > 0.0 ? diag / 64.0 : 1.0);
    std::size_t n_selected = 0;

    auto edist = [&](std::size_t a, std::size_t b) {
        double s = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double d = rows[a * m + j] - rows[b * m + j];
            s += d * d;
        }
        return std::sqrt(s);
    };
    auto row = [&](std::size_t i) { return std::span<const double>(rows.data() + i * m, m); };

    // Exact embedded-space NN against the selected set, shell pruning.
    auto nn_to_selected = [&](std::size_t i) {
        if (n_selected == 0) return std::numeric_limits<double>::max();
        const auto center = grid.cell_of(row(i));
        double best = std::numeric_limits<double>::max();
        bool found = false;
        const double cell = grid.cell();
        for (std::int64_t r = 0; r <= 66; ++r) {
            if (found && static_cast<double>(r - 1) * cell > best) break;
            grid.visit_shell(center, r, [&](std::int32_t idx) {
                const double d = edist(i, static_cast<std::size_t>(idx));
                if (d < best) best = d;
                found = true;
            });
        }
        return best;
    };

    std::vector<char> done(n, 0);
    for (std::size_t i = 0; i < protect; ++i) {
        grid.add(row(i), static_cast<std::int32_t>(i));
        kept.push_back(static_cast<std::int32_t>(i));
        done[i] = 1;
        ++n_selected;
    }
    if (protect == 0 && n > 0) {
        // Seed with the row farthest from the centroid, lowest index on ties.
        std::vector<double> centroid(m, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) centroid[j] += rows[i * m + j];
        for (std::size_t j = 0; j < m; ++j) centroid[j] /= static_cast<double>(n);
        std::size_t seed = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double dd = rows[i * m + j] - centroid[j];
                s += dd * dd;
            }
            if (s > best) {
                best = s;
                seed = i;
            }
        }
        grid.add(row(seed), static_cast<std::int32_t>(seed));
        kept.push_back(static_cast<std::int32_t>(seed));
        done[seed] = 1;
        ++n_selected;
    }

    // Lazy-key max-heap: keys are stale upper bounds on the distance to the
    // selected set; a popped candidate is re-verified before selection.
    struct Entry {
        double d;
        std::int32_t idx;
    };
    struct Cmp {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.d != b.d) return a.d < b.d;
            return a.idx > b.idx;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, Cmp> heap;
    std::vector<double> best_known(n, std::numeric_limits<double>::max());
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        best_known[i] = nn_to_selected(i);
        heap.push({best_known[i], static_cast<std::int32_t>(i)});
    }

    while (kept.size() < cap && !heap.empty()) {
        const Entry top = heap.top();
        heap.pop();
        const std::size_t i = static_cast<std::size_t>(top.idx);
        if (done[i] || top.d > best_known[i]) continue;  // stale entry
        const double fresh = nn_to_selected(i);
        if (fresh < top.d) {
            best_known[i] = fresh;
            heap.push({fresh, top.idx});
            continue;
        }
        done[i] = 1;
        kept.push_back(top.idx);
        grid.add(row(i), top.idx);
        ++n_selected;
    }
    return kept;
}

}  // namespace

std::vector<std::int32_t> farthest_point_subsample(int emb_dim, const std::vector<double>& rows,
                                                   std::size_t n, std::size_t protect,
                                                   std::size_t cap) {
    return fps_impl(emb_dim, rows, n, protect, cap, false);
}

std::vector<std::int32_t> farthest_point_order_rows(int emb_dim, const std::vector<double>& rows,
                                                    std::size_t n) {
    return fps_impl(emb_dim, rows, n, 0, n, true);
}

namespace {

double excess_impl(const PointCloud& a, const NearestIndex& bidx, int threads) {
    const std::size_t n = a.size();
    if (threads <= 1 || n < 2048) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, bidx.distance(a[i]));
        return worst;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    const int nt = std::min<int>(threads, static_cast<int>(hw > 0 ? hw : 1));
    std::vector<double> local(static_cast<std::size_t>(nt), 0.0);
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + static_cast<std::size_t>(nt) - 1) / static_cast<std::size_t>(nt);
    for (int t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            const std::size_t beg = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(n, beg + chunk);
            double worst = 0.0;
            for (std::size_t i = beg; i < end; ++i) worst = std::max(worst, bidx.distance(a[i]));
            local[static_cast<std::size_t>(t)] = worst;
        });
    }
    for (auto& th : pool) th.join();
    double worst = 0.0;
    for (double v : local) worst = std::max(worst, v);
    return worst;
}

void require_comparable(const PointCloud& a, const PointCloud& b) {
    if (a.space() != b.space())
        throw KindMismatchError("hausdorff: clouds live in different spaces");
    if (a.empty() || b.empty()) throw InputError("hausdorff: empty cloud");
}

}  // namespace

double hausdorff_excess(const PointCloud& a, const PointCloud& b, int threads) {
    require_comparable(a, b);
    NearestIndex bidx(b);
    return excess_impl(a, bidx, threads);
}

double hausdorff(const PointCloud& a, const PointCloud& b, int threads) {
    require_comparable(a, b);
    NearestIndex aidx(a), bidx(b);
    return std::max(excess_impl(a, bidx, threads), excess_impl(b, aidx, threads));
}

}  // namespace cat0
