#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "cat0/error.hpp"
#include "cat0/geometry.hpp"
#include "cat0/rng.hpp"

using namespace cat0;

namespace {

Point e1(double x) { return Point::euclidean({x}); }
Point e2(double x, double y) { return Point::euclidean({x, y}); }
Point bq(Quadrant q, double a, double b) { return Point::biquadrant(q, a, b); }

std::vector<Space> shipped_spaces() {
    return {Space::euclidean(1),
            Space::euclidean(2),
            Space::euclidean(3),
            Space::biquadrant(),
            Space::product(Space::euclidean(1), Space::euclidean(1)),
            Space::product(Space::biquadrant(), Space::euclidean(1))};
}

// Independent shortest-path oracle for the glued plane: both quadrants
// discretized as grids over [0, R]^2 joined at the origin node, edges to the
// 16-neighborhood weighted by Euclidean length, Dijkstra from the source.
// Grid metric error for this neighborhood is below 3 percent.
class GluedGridOracle {
public:
    GluedGridOracle(double radius, int cells) : r_(radius), n_(cells), h_(radius / cells) {}

    double distance(const Point& from, const Point& to) const {
        const auto d = dijkstra(node_of(from));
        return d[static_cast<std::size_t>(node_of(to))];
    }

    double h() const { return h_; }

private:
    // Node ids: plus quadrant row-major, then minus quadrant; both (0,0)
    // grid corners alias to the single origin node.
    int node_of(const Point& p) const {
        const bool plus = p.quadrant() == Quadrant::plus;
        const double a = std::abs(p.xy()[0]);
        const double b = std::abs(p.xy()[1]);
        const int i = static_cast<int>(std::lround(a / h_));
        const int j = static_cast<int>(std::lround(b / h_));
        REQUIRE(std::abs(i * h_ - a) < 1e-9);  // oracle probes must be grid-aligned
        REQUIRE(std::abs(j * h_ - b) < 1e-9);
        if (i == 0 && j == 0) return 0;
        const int base = plus ? 0 : (n_ + 1) * (n_ + 1);
        return 1 + base + i * (n_ + 1) + j;
    }

    std::vector<double> dijkstra(int source) const {
        const int per_quadrant = (n_ + 1) * (n_ + 1);
        const int total = 1 + 2 * per_quadrant;
        std::vector<double> dist(static_cast<std::size_t>(total),
                                 std::numeric_limits<double>::max());
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist[static_cast<std::size_t>(source)] = 0.0;
        heap.push({0.0, source});
        static const int offsets[][2] = {{1, 0},  {0, 1},  {-1, 0}, {0, -1}, {1, 1},  {1, -1},
                                         {-1, 1}, {-1, -1}, {1, 2},  {2, 1},  {1, -2}, {2, -1},
                                         {-1, 2}, {-2, 1}, {-1, -2}, {-2, -1}};
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (d > dist[static_cast<std::size_t>(u)]) continue;
            for (const auto& off : offsets) {
                for (int q = 0; q < 2; ++q) {
                    int i, j;
                    if (u == 0) {
                        i = 0;
                        j = 0;
                    } else {
                        const int local = u - 1 - q * per_quadrant;
                        if (local < 0 || local >= per_quadrant) continue;
                        i = local / (n_ + 1);
                        j = local % (n_ + 1);
                    }
                    const int ni = i + off[0];
                    const int nj = j + off[1];
                    if (ni < 0 || nj < 0 || ni > n_ || nj > n_) continue;
                    const int v = (ni == 0 && nj == 0) ? 0 : 1 + q * per_quadrant + ni * (n_ + 1) + nj;
                    const double w = h_ * std::sqrt(static_cast<double>(off[0] * off[0] +
                                                                        off[1] * off[1]));
                    if (dist[static_cast<std::size_t>(u)] + w < dist[static_cast<std::size_t>(v)]) {
                        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
                        heap.push({dist[static_cast<std::size_t>(v)], v});
                    }
                    if (u != 0) break;  // a non-origin node lives in one quadrant only
                }
            }
        }
        return dist;
    }

    double r_;
    int n_;
    double h_;
};

}  // namespace

TEST_CASE("euclidean distance basics") {
    const Space sp = Space::euclidean(2);
    CHECK(dist(sp, e2(0, 0), e2(3, 4)) == doctest::Approx(5.0));
    CHECK(dist(sp, e2(1.5, -2), e2(1.5, -2)) == 0.0);
    CHECK_THROWS_AS(dist(sp, e1(0), e2(0, 0)), KindMismatchError);
}

TEST_CASE("biquadrant distance: same quadrant euclidean, opposite through origin") {
    const Space sp = Space::biquadrant();
    const Point x = bq(Quadrant::plus, 1, 2);
    const Point y = bq(Quadrant::minus, -3, -4);
    CHECK(dist(sp, x, y) == doctest::Approx(std::sqrt(5.0) + 5.0));
    CHECK(dist(sp, x, bq(Quadrant::plus, 4, 6)) == doctest::Approx(5.0));
    CHECK(dist(sp, x, x) == 0.0);
    // origin is canonically plus; distance from it agrees with both formulas
    const Point origin = bq(Quadrant::minus, 0, 0);
    CHECK(origin.quadrant() == Quadrant::plus);
    CHECK(dist(sp, origin, y) == doctest::Approx(5.0));
}

TEST_CASE("glued-grid oracle corroborates the biquadrant metric") {
    const Space sp = Space::biquadrant();
    const GluedGridOracle oracle(2.0, 40);
    const auto check_pair = [&](const Point& a, const Point& b) {
        const double truth = dist(sp, a, b);
        const double approx = oracle.distance(a, b);
        CHECK(approx >= truth - 1e-9);  // grid paths can only be longer
        CHECK(approx <= truth * 1.03 + 2 * oracle.h());
    };
    check_pair(bq(Quadrant::plus, 1, 0), bq(Quadrant::minus, 0, -1));
    check_pair(bq(Quadrant::plus, 1, 0), bq(Quadrant::plus, 0, 1));
    check_pair(bq(Quadrant::plus, 0.5, 1.5), bq(Quadrant::minus, -1, -0.5));
    check_pair(bq(Quadrant::plus, 2, 2), bq(Quadrant::minus, -2, 0));
    check_pair(bq(Quadrant::minus, -0.5, 0), bq(Quadrant::minus, -1.5, -1));
}

TEST_CASE("interpolate examples") {
    const Space e1sp = Space::euclidean(1);
    CHECK(interpolate(e1sp, e1(0), e1(2), 0.5).coords()[0] == doctest::Approx(1.0));

    const Space bsp = Space::biquadrant();
    const Point x = bq(Quadrant::plus, 1, 0);
    const Point y = bq(Quadrant::minus, -2, 0);
    const Point third = interpolate(bsp, x, y, 1.0 / 3.0);
    CHECK(third.xy()[0] == doctest::Approx(0.0));
    CHECK(third.xy()[1] == doctest::Approx(0.0));
    const Point two_thirds = interpolate(bsp, x, y, 2.0 / 3.0);
    CHECK(two_thirds.quadrant() == Quadrant::minus);
    CHECK(two_thirds.xy()[0] == doctest::Approx(-1.0));
    CHECK(two_thirds.xy()[1] == doctest::Approx(0.0));

    SUBCASE("degenerate segment returns x for any t") {
        const Point z = interpolate(bsp, x, x, 0.7);
        CHECK(dist(bsp, z, x) == 0.0);
    }
    SUBCASE("t outside the unit interval is rejected") {
        CHECK_THROWS_AS(interpolate(e1sp, e1(0), e1(2), 1.5), InputError);
        CHECK_THROWS_AS(interpolate(e1sp, e1(0), e1(2), -0.1), InputError);
    }
}

TEST_CASE("comparison defect: flat cases and the glued-plane witness") {
    SUBCASE("euclidean space has zero defect") {
        const Space sp = Space::euclidean(2);
        Rng rng(7);
        for (int i = 0; i < 200; ++i) {
            const Point x = sample_point(sp, rng, 5.0);
            const Point y = sample_point(sp, rng, 5.0);
            const Point z = sample_point(sp, rng, 5.0);
            CHECK(std::abs(cat0_defect(sp, x, y, z, rng.uniform01())) < 1e-9);
        }
    }
    SUBCASE("t = 0 collapses both sides") {
        const Space sp = Space::biquadrant();
        CHECK(cat0_defect(sp, bq(Quadrant::plus, 1, 2), bq(Quadrant::minus, -1, 0),
                          bq(Quadrant::plus, 0, 1), 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("cross-quadrant triple has defect exactly 1") {
        // Derived by direct evaluation: d(x,y) = 2, d(x,z) = sqrt(2),
        // d(y,z) = 2, x_{1/2} = origin, d(origin,z) = 1, so the defect is
        // 0.5*2 + 0.5*4 - 0.25*4 - 1 = 1.
        const Space sp = Space::biquadrant();
        const Point x = bq(Quadrant::plus, 1, 0);
        const Point y = bq(Quadrant::minus, 0, -1);
        const Point z = bq(Quadrant::plus, 0, 1);
        CHECK(cat0_defect(sp, x, y, z, 0.5) == doctest::Approx(1.0).epsilon(1e-12));

        // Same quantity assembled from oracle distances.
        const GluedGridOracle oracle(2.0, 40);
        const Point xt = interpolate(sp, x, y, 0.5);
        const double dxz = oracle.distance(x, z);
        const double dyz = oracle.distance(y, z);
        const double dxy = oracle.distance(x, y);
        const double dxtz = oracle.distance(xt, z);
        const double oracle_defect =
            0.5 * dxz * dxz + 0.5 * dyz * dyz - 0.25 * dxy * dxy - dxtz * dxtz;
        CHECK(oracle_defect == doctest::Approx(1.0).epsilon(0.35));
    }
}

TEST_CASE("flatness sampling verdicts") {
    CHECK(is_flat_sample(Space::euclidean(3), 10000, 11, 1e-9).flat);
    CHECK(is_flat_sample(Space::product(Space::euclidean(1), Space::euclidean(1)), 10000, 12, 1e-9)
              .flat);

    const auto verdict = is_flat_sample(Space::biquadrant(), 10000, 13, 1e-6);
    CHECK_FALSE(verdict.flat);
    REQUIRE(verdict.witness.has_value());
    CHECK(verdict.witness->defect > 1e-6);
    CHECK(verdict.min_defect >= -1e-9);
}

TEST_CASE("metric axioms, geodesic parameterization and comparison inequality per space") {
    for (const Space& sp : shipped_spaces()) {
        CAPTURE(sp.str());
        const SpaceCheckReport report = check_space(sp, 10000, 21);
        CHECK(report.metric_ok(1e-9));
        CHECK(report.max_symmetry_gap <= 1e-12);
        CHECK(report.cat0_ok(1e-9));
    }
}

TEST_CASE("sampling is deterministic given the seed") {
    const Space sp = Space::product(Space::biquadrant(), Space::euclidean(2));
    Rng a(99), b(99);
    for (int i = 0; i < 50; ++i) {
        const Point pa = sample_point(sp, a, 10.0);
        const Point pb = sample_point(sp, b, 10.0);
        CHECK(dist(sp, pa, pb) == 0.0);
    }
}

TEST_CASE("space descriptor parsing round trip") {
    for (const char* spec : {"euclidean:3", "biquadrant", "product(euclidean:1,biquadrant)",
                             "product(product(euclidean:2,euclidean:1),biquadrant)"}) {
        const Space sp = Space::parse(spec);
        CHECK(Space::parse(sp.str()) == sp);
    }
    CHECK_THROWS_AS(Space::parse("euclidean:0"), InputError);
    CHECK_THROWS_AS(Space::parse("sphere"), InputError);
    CHECK_THROWS_AS(Space::parse("product(euclidean:1)"), InputError);
}

TEST_CASE("biquadrant point validation and canonical origin") {
    CHECK_THROWS_AS(Point::biquadrant(Quadrant::plus, -1, 0), InputError);
    CHECK_THROWS_AS(Point::biquadrant(Quadrant::minus, 0, 2), InputError);
    CHECK(Point::biquadrant(Quadrant::minus, 0, 0).quadrant() == Quadrant::plus);
}
