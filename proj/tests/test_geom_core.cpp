#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "crossfam/constructions.hpp"
#include "crossfam/geometry.hpp"

using namespace crossfam;

namespace {

Point pt(long x, long y) { return Point(Rat(x), Rat(y)); }

ColoredPointSet set_of(std::initializer_list<Point> pts) {
    return ColoredPointSet(std::vector<Point>(pts));
}

}  // namespace

TEST_CASE("orientation matches the determinant formula") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    // The determinant evaluates to -2 here.
    CHECK(orientation(pt(1, 0), pt(2, 1), pt(3, 0)) == -1);
}

TEST_CASE("orientation is antisymmetric under swaps") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Point a(Rat(rng.uniform(-50, 50)), Rat(rng.uniform(-50, 50)));
        Point b(Rat(rng.uniform(-50, 50)), Rat(rng.uniform(-50, 50)));
        Point c(Rat(rng.uniform(-50, 50)), Rat(rng.uniform(-50, 50)));
        int o = orientation(a, b, c);
        CHECK(orientation(b, a, c) == -o);
        CHECK(orientation(a, c, b) == -o);
        CHECK(orientation(c, b, a) == -o);
    }
}

TEST_CASE("classify_pair on the spec examples") {
    ColoredPointSet ps = set_of({pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)});
    CHECK(classify_pair(Segment(0, 1), Segment(2, 3), ps) ==
          PairRelation::Crossing);

    ColoredPointSet ps2 = set_of({pt(0, 0), pt(2, 0), pt(1, 1), pt(1, 3)});
    // Supporting lines meet at (1, 0): interior to the first segment only.
    CHECK(classify_pair(Segment(0, 1), Segment(2, 3), ps2) ==
          PairRelation::SecondStabsFirst);
    CHECK(classify_pair(Segment(2, 3), Segment(0, 1), ps2) ==
          PairRelation::FirstStabsSecond);

    ColoredPointSet ps3 = set_of({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)});
    CHECK(classify_pair(Segment(0, 1), Segment(2, 3), ps3) ==
          PairRelation::Parallel);

    ColoredPointSet ps4 = set_of({pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 3)});
    CHECK(classify_pair(Segment(0, 1), Segment(2, 3), ps4) ==
          PairRelation::Degenerate);
}

TEST_CASE("classify_pair mirrors under argument swap") {
    for (int t = 0; t < 300; ++t) {
        ColoredPointSet ps = random_point_set(4, 1000 + t, 100);
        PairRelation r1 = classify_pair(Segment(0, 1), Segment(2, 3), ps);
        PairRelation r2 = classify_pair(Segment(2, 3), Segment(0, 1), ps);
        if (r1 == PairRelation::FirstStabsSecond)
            CHECK(r2 == PairRelation::SecondStabsFirst);
        else if (r1 == PairRelation::SecondStabsFirst)
            CHECK(r2 == PairRelation::FirstStabsSecond);
        else
            CHECK(r1 == r2);
    }
}

TEST_CASE("classify_pair agrees with a float classifier away from boundaries") {
    int compared = 0;
    for (int t = 0; t < 1000; ++t) {
        ColoredPointSet ps = random_point_set(4, 5000 + t, 1000);
        auto fx = [&](int i) { return rat_to_double(ps[i].x); };
        auto fy = [&](int i) { return rat_to_double(ps[i].y); };
        double d1x = fx(1) - fx(0), d1y = fy(1) - fy(0);
        double d2x = fx(3) - fx(2), d2y = fy(3) - fy(2);
        double den = d1x * d2y - d1y * d2x;
        double scale = std::abs(d1x) + std::abs(d1y) + std::abs(d2x) +
                       std::abs(d2y);
        if (std::abs(den) < 1e-6 * scale * scale) continue;
        double t1 = ((fx(2) - fx(0)) * d2y - (fy(2) - fy(0)) * d2x) / den;
        double t2 = -((fx(0) - fx(2)) * d1y - (fy(0) - fy(2)) * d1x) / den;
        auto near_boundary = [](double v) {
            return std::abs(v) < 1e-6 || std::abs(v - 1) < 1e-6;
        };
        if (near_boundary(t1) || near_boundary(t2)) continue;
        bool in1 = t1 > 0 && t1 < 1;
        bool in2 = t2 > 0 && t2 < 1;
        PairRelation expect =
            in1 && in2 ? PairRelation::Crossing
            : in1      ? PairRelation::SecondStabsFirst
            : in2      ? PairRelation::FirstStabsSecond
                       : PairRelation::Parallel;
        CHECK(classify_pair(Segment(0, 1), Segment(2, 3), ps) == expect);
        ++compared;
    }
    CHECK(compared > 500);
}

TEST_CASE("convex hull basics") {
    ColoredPointSet tri = set_of({pt(0, 0), pt(4, 0), pt(1, 3)});
    CHECK(convex_hull(tri).size() == 3);

    ColoredPointSet sq =
        set_of({pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(2, 1)});
    std::vector<int> hull = convex_hull(sq);
    CHECK(hull.size() == 4);
    CHECK(std::find(hull.begin(), hull.end(), 4) == hull.end());
    // Counterclockwise orientation throughout.
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point& a = sq[hull[i]];
        const Point& b = sq[hull[(i + 1) % hull.size()]];
        const Point& c = sq[hull[(i + 2) % hull.size()]];
        CHECK(orientation(a, b, c) == 1);
    }
}

TEST_CASE("convex hull matches the brute-force membership oracle") {
    for (int t = 0; t < 20; ++t) {
        ColoredPointSet ps = random_point_set(10, 9000 + t, 200);
        std::vector<int> hull = convex_hull(ps);
        const int n = static_cast<int>(ps.size());
        // Oracle: a point is a hull vertex iff it lies inside no triangle.
        for (int p = 0; p < n; ++p) {
            bool inside_some = false;
            for (int a = 0; a < n && !inside_some; ++a)
                for (int b = a + 1; b < n && !inside_some; ++b)
                    for (int c = b + 1; c < n; ++c) {
                        if (a == p || b == p || c == p) continue;
                        int o1 = orientation(ps[a], ps[b], ps[p]);
                        int o2 = orientation(ps[b], ps[c], ps[p]);
                        int o3 = orientation(ps[c], ps[a], ps[p]);
                        if (o1 == o2 && o2 == o3) {
                            inside_some = true;
                            break;
                        }
                    }
            bool on_hull =
                std::find(hull.begin(), hull.end(), p) != hull.end();
            CHECK(on_hull == !inside_some);
        }
    }
}

TEST_CASE("convex hull is permutation invariant as a cyclic sequence") {
    ColoredPointSet ps = random_point_set(12, 42, 500);
    std::vector<int> base = convex_hull(ps);
    std::vector<Point> coords;
    for (int i : base) coords.push_back(ps[i]);

    ColoredPointSet shuffled;
    for (std::size_t i = 0; i < ps.size(); ++i)
        shuffled.points.push_back(ps[(i * 7 + 3) % ps.size()]);
    std::vector<int> other = convex_hull(shuffled);
    REQUIRE(other.size() == base.size());
    std::vector<Point> coords2;
    for (int i : other) coords2.push_back(shuffled[i]);
    std::size_t shift = 0;
    while (shift < coords2.size() && !(coords2[shift] == coords[0])) ++shift;
    REQUIRE(shift < coords2.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        CHECK(coords[i] == coords2[(shift + i) % coords2.size()]);
}

TEST_CASE("general position detection") {
    ColoredPointSet bad = set_of({pt(0, 0), pt(1, 0), pt(2, 0)});
    GeneralPositionReport rep = is_general_position(bad);
    CHECK(!rep.ok);
    CHECK(rep.a == 0);
    CHECK(rep.b == 1);
    CHECK(rep.c == 2);

    CHECK(is_general_position(set_of({pt(0, 0), pt(1, 0), pt(0, 1)})).ok);

    // Zero-perturbation blow-up stacks coincident copies.
    ColoredPointSet tri = set_of({pt(0, 0), pt(4, 0), pt(1, 3)});
    BlowUpResult blown = blow_up(tri, 6, 0, Rat(0));
    CHECK(!is_general_position(blown.points).ok);
}
