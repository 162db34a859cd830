#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "ori/certifier.hpp"

using namespace ori;

namespace {

ShapeSequence koch_seq(int n, ShapeParams p) {
    return embed_koch(interpret_turtle(expand(koch_system(), n), koch_semantics()), p);
}

ShapeSequence mink_seq(int n, ShapeParams p) {
    return embed_minkowski(interpret_turtle(expand(minkowski_system(), n), minkowski_semantics()),
                           p);
}

// Count self-avoiding extensions of the unit path (0,0)-(1,0) by p steps.
size_t saw_extensions(int p) {
    size_t count = 0;
    std::vector<Point> walk = {{0, 0}, {1, 0}};
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            ++count;
            return;
        }
        for (Point d : kDirections) {
            Point next = walk.back() + d;
            if (std::find(walk.begin(), walk.end(), next) != walk.end()) continue;
            walk.push_back(next);
            self(self, left - 1);
            walk.pop_back();
        }
    };
    rec(rec, p);
    return count;
}

}  // namespace

TEST_CASE("delay bound families evaluate the affine forms") {
    ShapeParams p{2, 3};
    CHECK(koch_delay_bounds(p).at(1) == 16);
    CHECK(koch_delay_bounds(p).at(2) == 70);
    CHECK(minkowski_delay_bounds(p).at(1) == 19);
    CHECK(minkowski_delay_bounds(p).at(2) == 103);
    CHECK_THROWS_AS(koch_delay_bounds(p).at(3), std::out_of_range);
}

TEST_CASE("pigeonhole threshold is exact") {
    CHECK(pigeonhole_threshold(1, 1, 4) == 626);  // 1 + 1 * 5^4
    CHECK(pigeonhole_threshold(4, 4, 0) == 5);    // 1 + 4 * 5^0
    CHECK(pigeonhole_threshold(6, 4, 1) == 1251); // 1 + 2 * 5^4
    CHECK(pigeonhole_threshold(5, 3, 2) == 1 + BigInt(15625));
    CHECK_THROWS_AS(pigeonhole_threshold(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(pigeonhole_threshold(1, 1, -1), std::invalid_argument);
}

TEST_CASE("big thresholds compare without overflow") {
    BigInt t = pigeonhole_threshold(1, 1, 244);
    BigInt check = boost::multiprecision::pow(BigInt(5), 244) + 1;
    CHECK(t == check);
    CHECK(t > BigInt(2000));
    CHECK(t.str().size() == 171);  // 5^244 has 171 digits
    // monotone in depth
    for (int d = 0; d < 30; ++d)
        CHECK(pigeonhole_threshold(3, 2, d) < pigeonhole_threshold(3, 2, d + 1));
}

TEST_CASE("at most five self-avoiding head extensions per step") {
    size_t bound = 1;
    for (int p = 1; p <= 8; ++p) {
        bound *= 5;
        CHECK(saw_extensions(p) <= bound);
    }
}

TEST_CASE("thresholds with ten-thousand-digit results stay exact") {
    BigInt t = pigeonhole_threshold(1, 1, 15000);
    CHECK(t.str().size() >= 10000);
    CHECK((t - 1) % 5 == 0);
}

TEST_CASE("horizon regions name intersecting pairs and detect the boundary") {
    ShapeParams p{2, 3};
    auto seq = koch_seq(3, p);  // 65 vertices
    auto family = koch_delay_bounds(p);
    auto hr = horizon_region(8, 1, seq, family);
    CHECK(!hr.region.empty());
    CHECK(std::is_sorted(hr.region.begin(), hr.region.end()));
    REQUIRE(!hr.shape_pairs.empty());
    CHECK(std::count(hr.shape_pairs.begin(), hr.shape_pairs.end(), 8) == 1);
    for (size_t j : hr.shape_pairs) CHECK(j >= 1);
    // near the end of the expansion the region hits the final shape
    CHECK_THROWS_AS(horizon_region(65, 1, seq, family), std::invalid_argument);
    CHECK_THROWS_AS(horizon_region(0, 1, seq, family), std::out_of_range);
    CHECK_THROWS_AS(horizon_region(99, 1, seq, family), std::out_of_range);
}

TEST_CASE("dependency profile: koch depth is small and settles") {
    ShapeParams p{2, 3};
    auto seq = koch_seq(4, p);  // 257 vertices
    auto profile = dependency_depth(seq, koch_delay_bounds(p), 1, 10, 150);
    CHECK(profile.max_depth <= 4);
    CHECK(profile.depth_constant_on_window);
    CHECK(profile.reach.size() == 150);
    for (size_t i = 1; i <= 150; ++i) {
        CHECK(profile.reach[i - 1] >= 1);
        CHECK(profile.reach[i - 1] <= static_cast<long long>(i));
    }
    // at d=3,l=3 the radius-20 horizon exactly reaches the point shape two
    // straight curve units back, which carries index gap 6
    auto wide = dependency_depth(koch_seq(4, ShapeParams{3, 3}), koch_delay_bounds({3, 3}), 1,
                                 12, 150);
    CHECK(wide.max_depth == 6);
    CHECK(wide.depth_constant_on_window);
}

TEST_CASE("dependency profile: minkowski depth settles at 64") {
    // The slant halves distances along one square diagonal, so blocks eight
    // indices apart (square offset (4,-4)) fall inside a radius-20 horizon;
    // the depth settles at 8*8 = 64 once that configuration first occurs.
    ShapeParams p{2, 3};
    auto seq = mink_seq(3, p);  // 513 vertices
    auto profile = dependency_depth(seq, minkowski_delay_bounds(p), 1, 233, 400);
    CHECK(profile.max_depth == 64);
    CHECK(profile.depth_constant_on_window);
    CHECK(profile.depth[230] == 61);
    CHECK(profile.depth[232] == 64);
    auto earlier = dependency_depth(seq, minkowski_delay_bounds(p), 1, 70, 200);
    CHECK(earlier.max_depth == 58);
    CHECK_FALSE(earlier.depth_constant_on_window);
}

TEST_CASE("deeper levels see no less: reach and depth are monotone in n") {
    ShapeParams p{2, 3};
    auto seq = koch_seq(5, p);
    auto p1 = dependency_depth(seq, koch_delay_bounds(p), 1, 30, 60);
    auto p2 = dependency_depth(seq, koch_delay_bounds(p), 2, 30, 60);
    for (size_t i = 0; i < 60; ++i) {
        CHECK(p2.reach[i] <= p1.reach[i]);
        CHECK(p2.depth[i] >= p1.depth[i]);
    }
}

TEST_CASE("dependency profile is isometry-invariant") {
    ShapeParams p{2, 3};
    auto seq = koch_seq(4, p);
    auto base = dependency_depth(seq, koch_delay_bounds(p), 1, 10, 120);
    Isometry g = Isometry::point_group()[10];
    g.translation = {-9, 4};
    auto moved = dependency_depth(transformed(seq, g), koch_delay_bounds(p), 1, 10, 120);
    CHECK(moved.reach == base.reach);
    CHECK(moved.depth == base.depth);
}

TEST_CASE("certify reaches a fixed point and issues verdicts") {
    // p_pl = 1 keeps the threshold (626 at depth 4) inside the window
    auto report = certify(BuiltinCurve::Koch, ShapeParams{2, 3}, 4, 1, {1}, 10, 700);
    REQUIRE(report.levels.size() == 1);
    CHECK(report.levels[0].profile.depth_constant_on_window);
    CHECK(report.levels[0].profile.max_depth <= 4);
    CHECK(report.levels[0].thm3_holds);
    CHECK(report.thm4_holds);
    CHECK(report.thm5_evidence);
    CHECK(report.expansion_depth >= 5);
    // threshold at the witness is within the window
    BigInt t(report.levels[0].threshold_at_witness);
    CHECK(t <= BigInt(report.levels[0].thm3_witness));
    CHECK(report.levels[0].thm3_witness <= 700);
    // with constant depth, the witness is the first index past the threshold
    if (t > 10) CHECK(BigInt(report.levels[0].thm3_witness) == t);
    // render is deterministic and carries the verdict lines
    std::string r1 = report.render(), r2 = report.render();
    CHECK(r1 == r2);
    CHECK(r1.find("thm3-condition: holds") != std::string::npos);
    CHECK(r1.find("thm5-verdict:") != std::string::npos);
}

TEST_CASE("certify reports out-of-window thresholds as not reached") {
    // realistic shape periods push the threshold far beyond the window
    auto report = certify(BuiltinCurve::Koch, ShapeParams{2, 3}, 4, 4, {1}, 10, 120);
    REQUIRE(report.levels.size() == 1);
    CHECK_FALSE(report.levels[0].thm3_holds);
    CHECK(report.thm5_evidence);
    CHECK(BigInt(report.levels[0].threshold_at_max_depth) > BigInt(120));
    CHECK(report.render().find("not-reached-in-window") != std::string::npos);
}

TEST_CASE("certify_sequence works without deepening") {
    ShapeParams p{2, 3};
    auto seq = koch_seq(5, p);
    auto report = certify_sequence(seq, "koch", koch_delay_bounds(p), 5, 1, {1}, 10, 700);
    REQUIRE(report.levels.size() == 1);
    CHECK(report.levels[0].profile.max_depth <= 4);
    CHECK(report.levels[0].thm3_holds);  // gcd(5,1) = 1, threshold 626 <= 700
}
