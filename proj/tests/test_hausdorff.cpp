#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsinfer/core/hausdorff.hpp"

#include <cmath>

using namespace rsinfer;

namespace {

double dist_to_box(const Vec& x, const IntervalBox& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = std::max({0.0, b.lo[i] - x[i], x[i] - b.hi[i]});
        s += d * d;
    }
    return std::sqrt(s);
}

// dense-grid oracle for sup_{x in box} min-dist to the points
double grid_directed(const IntervalBox& b, const std::vector<Vec>& pts, int steps) {
    double worst = 0.0;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j <= steps; ++j) {
            const Vec x = {b.lo[0] + (b.hi[0] - b.lo[0]) * i / steps,
                           b.lo[1] + (b.hi[1] - b.lo[1]) * j / steps};
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : pts)
                best = std::min(best, std::hypot(x[0] - p[0], x[1] - p[1]));
            worst = std::max(worst, best);
        }
    }
    return worst;
}

} // namespace

TEST_CASE("hausdorff basics") {
    const auto p0 = SetRealization::points({{0.0}});
    CHECK(hausdorff_distance(p0, p0) == 0.0);
    CHECK(hausdorff_distance(p0, SetRealization::points({{3.0}})) == doctest::Approx(3.0));

    const auto b01 = SetRealization::box(IntervalBox({0.0}, {1.0}));
    const auto ends = SetRealization::points({{0.0}, {1.0}});
    CHECK(hausdorff_distance(b01, ends) == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(hausdorff_distance(ends, b01) == doctest::Approx(0.5).epsilon(1e-5));

    // order-insensitive point sets
    CHECK(hausdorff_distance(SetRealization::points({{0.0}, {1.0}}),
                             SetRealization::points({{1.0}, {0.0}})) == 0.0);

    CHECK_THROWS_AS((void)hausdorff_distance(b01, b01), ConfigError);
    CHECK_THROWS_AS((void)hausdorff_distance(b01, SetRealization::empty()), ConfigError);
}

TEST_CASE("asymmetric construction still yields the symmetric metric") {
    // point far outside the box dominates one direction
    const auto b = SetRealization::box(IntervalBox({0.0, 0.0}, {1.0, 1.0}));
    const auto pts = SetRealization::points({{0.5, 0.5}, {3.0, 0.5}});
    const double d = hausdorff_distance(b, pts);
    // sup over box of min-dist: corner (0,0) or (0,1) to (0.5,0.5) = sqrt(0.5);
    // sup over points: (3.0,0.5) to box = 2.0 -> metric = 2.0
    CHECK(d == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(hausdorff_distance(pts, b) == doctest::Approx(d).epsilon(1e-9));
}

TEST_CASE("branch-and-bound matches the dense grid oracle") {
    Rng rng(606);
    for (int t = 0; t < 25; ++t) {
        const double ax = rng.uniform(-1, 1), ay = rng.uniform(-1, 1);
        const IntervalBox box({ax, ay}, {ax + rng.uniform(0.2, 1.5), ay + rng.uniform(0.2, 1.5)});
        std::vector<Vec> pts;
        const int n = 3 + int(rng.uniform01() * 20);
        for (int i = 0; i < n; ++i)
            pts.push_back({rng.uniform(ax - 0.5, ax + 2.0), rng.uniform(ay - 0.5, ay + 2.0)});

        const double bb = hausdorff_distance(SetRealization::box(box),
                                             SetRealization::points(pts), 1e-7);
        double oracle = grid_directed(box, pts, 220);
        for (const auto& p : pts) oracle = std::max(oracle, dist_to_box(p, box));
        // the grid undershoots the sup by at most one cell diagonal
        const double cell = std::hypot(box.hi[0] - box.lo[0], box.hi[1] - box.lo[1]) / 220.0;
        CHECK(bb >= oracle - 1e-9);
        CHECK(bb <= oracle + cell + 1e-9);
    }
}

TEST_CASE("box union vs points") {
    const auto u = SetRealization::box_union(
        {IntervalBox({0.0}, {0.4}), IntervalBox({0.6}, {1.0})});
    const auto pts = SetRealization::points({{0.2}, {0.8}});
    // farthest set point from {0.2, 0.8} is 0.4 or 0.6 -> 0.2
    CHECK(hausdorff_distance(u, pts) == doctest::Approx(0.2).epsilon(1e-5));
}

TEST_CASE("denser samples shrink the distance to the covering set") {
    const auto sq = SetRealization::box(IntervalBox({0.0, 0.0}, {1.0, 1.0}));
    Rng rng(9001);
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {10, 100, 1000}) {
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform01(), rng.uniform01()});
        const double d = hausdorff_distance(sq, SetRealization::points(pts), 1e-6);
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 0.15);
}
