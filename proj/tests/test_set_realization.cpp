#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsinfer/common.hpp"
#include "rsinfer/core/set_realization.hpp"

using namespace rsinfer;

namespace {

IntervalBox box1(double lo, double hi) { return IntervalBox({lo}, {hi}); }
IntervalBox box2(double lx, double hx, double ly, double hy) {
    return IntervalBox({lx, ly}, {hx, hy});
}

// grid oracle: every sampled point of b must land in the union
bool grid_covered(const IntervalBox& b, const std::vector<IntervalBox>& cover,
                  int steps) {
    std::vector<double> fracs;
    for (int s = 0; s <= steps; ++s) fracs.push_back(double(s) / steps);
    if (b.dim() == 1) {
        for (double fx : fracs) {
            const Vec p = {b.lo[0] + fx * (b.hi[0] - b.lo[0])};
            bool in = false;
            for (const auto& c : cover) in = in || c.contains_point(p);
            if (!in) return false;
        }
        return true;
    }
    for (double fx : fracs) {
        for (double fy : fracs) {
            const Vec p = {b.lo[0] + fx * (b.hi[0] - b.lo[0]),
                           b.lo[1] + fy * (b.hi[1] - b.lo[1])};
            bool in = false;
            for (const auto& c : cover) in = in || c.contains_point(p);
            if (!in) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("contains and hits on box queries") {
    const auto s1 = SetRealization::box(box1(0, 1));
    CHECK(contains(s1, box1(-1, 2)));
    CHECK(hits(s1, box1(-1, 2)));

    const auto s2 = SetRealization::points({{0.5}, {3.0}});
    CHECK_FALSE(contains(s2, box1(0, 1)));
    CHECK(hits(s2, box1(0, 1)));

    const auto s3 = SetRealization::box_union({box1(0, 1), box1(2, 3)});
    CHECK_FALSE(contains(s3, box1(1.5, 1.9)));
    CHECK_FALSE(hits(s3, box1(1.5, 1.9)));

    // contains implies hits on a batch of random cases
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
        if (a > b) std::swap(a, b);
        const auto q = box1(a, b);
        const auto s = SetRealization::box(box1(rng.uniform(-2, 0), rng.uniform(0, 2)));
        if (contains(s, q)) CHECK(hits(s, q));
    }
}

TEST_CASE("infinite query boxes") {
    const auto whole = IntervalBox::whole(1);
    CHECK(contains(SetRealization::box(box1(-5, 9)), whole));
    CHECK(hits(SetRealization::points({{123.0}}), whole));
    // half line (-inf, x]
    const IntervalBox half({-std::numeric_limits<double>::infinity()}, {0.5});
    CHECK(contains(SetRealization::box(box1(-100, 0.5)), half));
    CHECK_FALSE(contains(SetRealization::box(box1(0, 1)), half));
    CHECK(hits(SetRealization::box(box1(0, 1)), half));
}

TEST_CASE("subset_of_set covers box unions exactly") {
    const auto u12 = SetRealization::box_union({box1(0, 1), box1(1, 2)});
    CHECK(subset_of_set(SetRealization::box(box1(0, 2)), u12));
    const auto gap = SetRealization::box_union({box1(0, 1), box1(1.2, 2)});
    CHECK_FALSE(subset_of_set(SetRealization::box(box1(0, 2)), gap));

    // 2-D: three tiles cover the square, remove one and coverage fails
    const std::vector<IntervalBox> tiles = {box2(0, 2, 0, 1), box2(0, 1, 0, 2),
                                            box2(1, 2, 1, 2)};
    const auto sq = SetRealization::box(box2(0, 2, 0, 2));
    CHECK(subset_of_set(sq, SetRealization::box_union(tiles)));
    for (std::size_t drop = 0; drop < tiles.size(); ++drop) {
        std::vector<IntervalBox> partial;
        for (std::size_t i = 0; i < tiles.size(); ++i)
            if (i != drop) partial.push_back(tiles[i]);
        CHECK_FALSE(subset_of_set(sq, SetRealization::box_union(partial)));
    }

    // points inside boxes / unions
    CHECK(subset_of_set(SetRealization::points({{0.5}, {1.5}}), u12));
    CHECK_FALSE(subset_of_set(SetRealization::points({{0.5}, {2.5}}), u12));
    // degenerate box inside a point set
    CHECK(subset_of_set(SetRealization::box(box1(0.5, 0.5)),
                        SetRealization::points({{0.5}})));
    CHECK_FALSE(subset_of_set(SetRealization::box(box1(0.4, 0.5)),
                              SetRealization::points({{0.5}})));
}

TEST_CASE("coverage agrees with a dense grid oracle") {
    Rng rng(77);
    int positives = 0;
    for (int t = 0; t < 300; ++t) {
        std::vector<IntervalBox> cover;
        const int members = 1 + int(rng.uniform01() * 3.0);
        for (int i = 0; i < members; ++i) {
            double ax = rng.uniform(0, 1), bx = ax + rng.uniform(0.2, 1.0);
            double ay = rng.uniform(0, 1), by = ay + rng.uniform(0.2, 1.0);
            cover.push_back(box2(ax, bx, ay, by));
        }
        double qa = rng.uniform(0, 1.3), qb = qa + rng.uniform(0.05, 0.7);
        double qc = rng.uniform(0, 1.3), qd = qc + rng.uniform(0.05, 0.7);
        const auto q = box2(qa, qb, qc, qd);
        const bool exact =
            subset_of_set(SetRealization::box(q), SetRealization::box_union(cover));
        if (exact) {
            ++positives;
            CHECK(grid_covered(q, cover, 60));
        } else {
            // generic random endpoints: an uncovered region has positive area,
            // so a fine grid finds a witness
            CHECK_FALSE(grid_covered(q, cover, 120));
        }
    }
    CHECK(positives > 10); // the case split actually exercised both branches
}

TEST_CASE("intersect across variants") {
    const auto a = SetRealization::box(box1(0, 2));
    const auto b = SetRealization::box(box1(1, 3));
    const auto ab = intersect(a, b);
    REQUIRE(ab.is_box());
    CHECK(ab.as_box().approx_equal(box1(1, 2), 0.0));

    CHECK(intersect(a, SetRealization::box(box1(3, 4))).is_empty());

    const auto pts = SetRealization::points({{0.5}, {1.5}, {2.5}});
    const auto pa = intersect(pts, a);
    REQUIRE(pa.is_points());
    CHECK(pa.as_points().pts.size() == 2);

    const auto u = SetRealization::box_union({box1(0, 1), box1(2, 3)});
    const auto ua = intersect(u, b); // [1,3] clips to {[1,1] within [0,1], [2,3]}
    REQUIRE(ua.is_box_union());
    CHECK(ua.as_box_union().boxes.size() == 2);

    CHECK(intersect(SetRealization::empty(), a).is_empty());

    // intersect(points, points) keeps shared atoms
    const auto p2 = intersect(pts, SetRealization::points({{1.5}, {9.0}}));
    REQUIRE(p2.is_points());
    CHECK(p2.as_points().pts.size() == 1);
    CHECK(p2.as_points().pts[0][0] == 1.5);
}

TEST_CASE("canonicalize and set_equal") {
    // duplicate points collapse, order does not matter
    const auto p1 = SetRealization::points({{1.0}, {0.0}, {1.0 + 1e-14}});
    const auto cp = canonicalize(p1);
    CHECK(cp.as_points().pts.size() == 2);
    CHECK(set_equal(p1, SetRealization::points({{0.0}, {1.0}})));

    // absorbed members and single-member unions collapse
    const auto un = SetRealization::box_union({box1(0, 2), box1(0.5, 1.5)});
    CHECK(canonicalize(un).is_box());
    CHECK(set_equal(un, SetRealization::box(box1(0, 2))));

    // identical duplicated members collapse
    const auto dup = SetRealization::box_union({box1(0, 1), box1(0, 1)});
    CHECK(canonicalize(dup).is_box());

    // degenerate box equals its point
    CHECK(set_equal(SetRealization::box(box1(0.3, 0.3)),
                    SetRealization::points({{0.3}})));
    CHECK_FALSE(set_equal(SetRealization::box(box1(0.3, 0.4)),
                          SetRealization::points({{0.3}})));

    CHECK(set_equal(SetRealization::empty(), SetRealization::empty()));
    CHECK_FALSE(set_equal(SetRealization::empty(), SetRealization::box(box1(0, 1))));

    // tolerance honored
    CHECK(set_equal(SetRealization::box(box1(0, 1)),
                    SetRealization::box(box1(0, 1 + 0.5e-12))));
    CHECK_FALSE(set_equal(SetRealization::box(box1(0, 1)),
                          SetRealization::box(box1(0, 1 + 1e-9))));
}

TEST_CASE("2-D union realization queries") {
    // product-of-dimensions realization: [0,1] x {0.2, 0.8}
    const auto s = SetRealization::box_union(
        {box2(0, 1, 0.2, 0.2), box2(0, 1, 0.8, 0.8)});
    CHECK(contains(s, box2(-1, 2, 0, 1)));
    CHECK(hits(s, box2(0.4, 0.6, 0.7, 0.9)));
    CHECK_FALSE(hits(s, box2(0.4, 0.6, 0.4, 0.6)));
    CHECK_FALSE(contains(s, box2(0, 1, 0.5, 1.0)));
}
