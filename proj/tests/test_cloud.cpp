#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cat0/cloud.hpp"
#include "cat0/error.hpp"
#include "cat0/geometry.hpp"
#include "cat0/rng.hpp"

using namespace cat0;

namespace {

Point e2(double x, double y) { return Point::euclidean({x, y}); }

PointCloud random_cloud(const Space& sp, std::size_t n, std::uint64_t seed, double radius = 10.0) {
    Rng rng(seed);
    PointCloud c(sp, 1e-6);
    while (c.size() < n) c.insert(sample_point(sp, rng, radius));
    return c;
}

}  // namespace

TEST_CASE("dedup merges within eps, first point wins, order preserved") {
    PointCloud c(Space::euclidean(2), 1e-3);
    CHECK(c.insert(e2(0, 0)));
    CHECK(c.insert(e2(1, 0)));
    CHECK_FALSE(c.insert(e2(0, 5e-4)));     // merged into the first point
    CHECK(c.insert(e2(0, 2e-3)));
    CHECK(c.size() == 3);
    CHECK(c[0].coords()[1] == 0.0);
    CHECK(c[1].coords()[0] == 1.0);
    CHECK(c[2].coords()[1] == 2e-3);
}

TEST_CASE("dedup uses the intrinsic metric across the glue point") {
    // Embedded distance between these is ~2e-7 but the broken path through
    // the origin is longer than eps, so they stay distinct.
    PointCloud c(Space::biquadrant(), 1e-6);
    CHECK(c.insert(Point::biquadrant(Quadrant::plus, 1e-7, 1.0)));
    CHECK(c.insert(Point::biquadrant(Quadrant::minus, -1e-7, -1.0)));
    CHECK(c.size() == 2);
}

TEST_CASE("nearest index returns exact nearest, lowest index on ties") {
    const Space sp = Space::euclidean(2);
    PointCloud c(sp, 1e-9);
    c.insert(e2(-1, 0));
    c.insert(e2(1, 0));
    c.insert(e2(0, 3));
    NearestIndex idx(c);
    const auto [i, d] = idx.nearest(e2(0, 0));
    CHECK(i == 0);  // both horizontal points at distance 1; index 0 wins
    CHECK(d == doctest::Approx(1.0));
    CHECK(idx.nearest(e2(0.9, 0.1)).first == 1);
    CHECK(idx.nearest(e2(0.5, 40)).first == 2);  // query far outside the box
}

TEST_CASE("nearest index agrees with brute force on random clouds") {
    for (const Space& sp : {Space::euclidean(3), Space::biquadrant(),
                            Space::product(Space::biquadrant(), Space::euclidean(1))}) {
        CAPTURE(sp.str());
        const PointCloud c = random_cloud(sp, 300, 5);
        NearestIndex idx(c);
        Rng rng(6);
        for (int q = 0; q < 200; ++q) {
            const Point probe = sample_point(sp, rng, 15.0);
            double best = 1e300;
            for (std::size_t i = 0; i < c.size(); ++i)
                best = std::min(best, dist(sp, c[i], probe));
            CHECK(idx.distance(probe) == doctest::Approx(best).epsilon(1e-15));
        }
    }
}

TEST_CASE("hausdorff examples and pseudometric properties") {
    const Space sp = Space::euclidean(2);
    PointCloud a(sp, 1e-9), b(sp, 1e-9);
    a.insert(e2(0, 0));
    b.insert(e2(3, 4));
    CHECK(hausdorff(a, b) == doctest::Approx(5.0));

    const Space e1sp = Space::euclidean(1);
    PointCloud c(e1sp, 1e-9), d(e1sp, 1e-9);
    c.insert(Point::euclidean({0}));
    c.insert(Point::euclidean({1}));
    d.insert(Point::euclidean({0}));
    CHECK(hausdorff(c, d) == doctest::Approx(1.0));
    CHECK(hausdorff(c, c) == 0.0);

    CHECK_THROWS_AS(hausdorff(a, PointCloud(sp, 1e-9)), InputError);
    CHECK_THROWS_AS(hausdorff(a, c), KindMismatchError);

    SUBCASE("symmetry is exact and the triangle inequality holds on random clouds") {
        const Space bsp = Space::biquadrant();
        for (std::uint64_t s = 0; s < 30; ++s) {
            const PointCloud x = random_cloud(bsp, 12, 100 + s);
            const PointCloud y = random_cloud(bsp, 9, 200 + s);
            const PointCloud z = random_cloud(bsp, 15, 300 + s);
            const double dxy = hausdorff(x, y);
            CHECK(hausdorff(y, x) == dxy);
            CHECK(dxy <= hausdorff(x, z) + hausdorff(z, y) + 1e-9);
            CHECK(dxy >= 0.0);
        }
    }
}

TEST_CASE("parallel hausdorff matches sequential") {
    const Space sp = Space::euclidean(2);
    const PointCloud a = random_cloud(sp, 4000, 42);
    const PointCloud b = random_cloud(sp, 3000, 43);
    CHECK(hausdorff(a, b, 4) == hausdorff(a, b, 1));
}

TEST_CASE("farthest point subsample keeps protected rows and spreads the rest") {
    const Space sp = Space::euclidean(2);
    const PointCloud c = random_cloud(sp, 2000, 9);
    const auto kept = farthest_point_subsample(c.embedding_dim(), c.embedded_rows(), c.size(),
                                               10, 200);
    REQUIRE(kept.size() == 200);
    for (int i = 0; i < 10; ++i) CHECK(kept[static_cast<std::size_t>(i)] == i);

    // Covering radius of the subsample should be close to the 200-point
    // optimum for a 20x20 box (~1.6), far below random-pick quality.
    PointCloud sub(sp, 1e-9);
    for (auto i : kept) sub.insert(c[static_cast<std::size_t>(i)]);
    NearestIndex idx(sub);
    double covering = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        covering = std::max(covering, idx.distance(c[i]));
    CHECK(covering < 2.5);

    SUBCASE("deterministic") {
        const auto again = farthest_point_subsample(c.embedding_dim(), c.embedded_rows(),
                                                    c.size(), 10, 200);
        CHECK(again == kept);
    }
    SUBCASE("no-op when the cloud fits the cap") {
        const auto all = farthest_point_subsample(c.embedding_dim(), c.embedded_rows(), c.size(),
                                                  10, c.size());
        CHECK(all.size() == c.size());
    }
}

TEST_CASE("embedded coordinates are a 1-Lipschitz image of the intrinsic metric") {
    for (const Space& sp : {Space::biquadrant(),
                            Space::product(Space::biquadrant(), Space::biquadrant())}) {
        CAPTURE(sp.str());
        Rng rng(77);
        for (int i = 0; i < 2000; ++i) {
            const Point x = sample_point(sp, rng, 10.0);
            const Point y = sample_point(sp, rng, 10.0);
            std::vector<double> ex, ey;
            x.embed(ex);
            y.embed(ey);
            double emb = 0.0;
            for (std::size_t j = 0; j < ex.size(); ++j) emb += (ex[j] - ey[j]) * (ex[j] - ey[j]);
            emb = std::sqrt(emb);
            const double intr = dist(sp, x, y);
            CHECK(emb <= intr + 1e-12);
            CHECK(intr <= std::sqrt(2.0) * emb + 1e-12);
        }
    }
}
