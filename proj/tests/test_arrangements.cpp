#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "crossfam/arrangements.hpp"
#include "crossfam/duality.hpp"
#include <cmath>
#include "crossfam/constructions.hpp"

using namespace crossfam;

namespace {

Line through_decimals(double x1, double y1, double x2, double y2,
                      Color c = Color::None) {
    auto r = [](double v) { return Rat(std::lround(v * 100), 100); };
    return Line::through(Point(r(x1), r(y1)), Point(r(x2), r(y2)), c);
}

// The eight-line figure from the drawn source coordinates, including the
// 35-degree rotation the figure is printed with. The bold subarrangement is
// lines {0,1,2,4,5,6}.
std::vector<Line> fig3_lines() {
    double coords[8][4] = {
        {0.09, 0.28, 4.0, -3.36},   {0.92, 1.25, 2.5, -3.43},
        {1.44, 1.62, 0.93, -4.14},  {2.29, 1.7, -0.66, -4.0},
        {-1.08, -1.4, 3.08, 1.71},  {-1.09, -1.98, 3.04, 0.76},
        {-1.21, -3.43, 2.94, -0.66}, {-1.29, -3.72, 4.0, -0.75}};
    Rat t(315299, 1000000), c, s;  // half-angle tangent of 35 degrees
    rotation_from_half_angle(t, c, s);
    std::vector<Line> lines;
    for (auto& e : coords) {
        Point p(Rat(std::lround(e[0] * 100), 100),
                Rat(std::lround(e[1] * 100), 100));
        Point q(Rat(std::lround(e[2] * 100), 100),
                Rat(std::lround(e[3] * 100), 100));
        lines.push_back(
            Line::through(rotate_point(p, c, s), rotate_point(q, c, s)));
    }
    return lines;
}

ColoredPointSet convex_points(int m) {
    ColoredPointSet ps;
    for (int i = 0; i < m; ++i) {
        Rat t(2 * i - m + 1, m + 1 + i);
        Rat c, s;
        rotation_from_half_angle(t, c, s);
        ps.points.emplace_back(c * 100, s * 100);
    }
    return ps;
}

}  // namespace

TEST_CASE("cell complexes count cells and levels") {
    std::vector<Line> two = {Line::slope_intercept(Rat(1), Rat(0)),
                             Line::slope_intercept(Rat(-1), Rat(1))};
    ArrangementBase base(two);
    CellComplex cc(base, {0, 1});
    CHECK(cc.cell_count() == 4);
    std::vector<int> levels;
    for (int c = 0; c < 4; ++c) levels.push_back(cc.level(c));
    std::sort(levels.begin(), levels.end());
    CHECK(levels == std::vector<int>{0, 1, 1, 2});

    for (int n : {3, 5, 7}) {
        Rng rng(80 + n);
        std::vector<Line> lines;
        for (int i = 0; i < n; ++i)
            lines.push_back(Line::slope_intercept(
                Rat(rng.uniform(-60, 60)) + rng.rat_in_unit() / 7,
                Rat(rng.uniform(-60, 60)) + rng.rat_in_unit() / 9));
        ArrangementBase b2(lines);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        CellComplex c2(b2, all);
        CHECK(c2.cell_count() == 1 + n + n * (n - 1) / 2);
        CHECK(static_cast<int>(c2.unbounded().size()) == 2 * n);
    }
}

TEST_CASE("figure-three arrangement: no spoke path of size eight") {
    std::vector<Line> lines = fig3_lines();
    CHECK(!find_spoke_path(lines, 8).has_value());
}

TEST_CASE("figure-three bold subarrangement admits a spoke path of size six") {
    std::vector<Line> lines = fig3_lines();
    ArrangementBase base(lines);
    auto w = search_pseudoline(base, {0, 1, 2, 4, 5, 6}, SemiMode::SpokePath);
    REQUIRE(w.has_value());
    CHECK(w->size() == 6);
    CHECK(validate_witness(lines, *w, SemiMode::SpokePath).ok);
    // The general search also finds one among all six-line subsets.
    CHECK(find_spoke_path(lines, 6).has_value());
}

TEST_CASE("crossing families dualize to spoke paths") {
    for (int k : {2, 3}) {
        ColoredPointSet ps = convex_points(2 * k);
        std::vector<Line> duals = dual_lines(ps);
        auto w = find_spoke_path(duals, 2 * k);
        REQUIRE(w.has_value());
        CHECK(validate_witness(duals, *w, SemiMode::SpokePath).ok);
    }
}

TEST_CASE("max spoke set basics") {
    ColoredPointSet two;
    two.points = {Point(Rat(0), Rat(0)), Point(Rat(5), Rat(2))};
    SpokeSetResult r = max_spoke_set(two);
    CHECK(r.size == 1);
    CHECK(is_spoke_set(r.witness, two));

    for (int k : {2, 3}) {
        ColoredPointSet ps = convex_points(2 * k);
        SpokeSetResult rr = max_spoke_set(ps);
        CHECK(rr.size == k);
        CHECK(is_spoke_set(rr.witness, ps));
    }
}

TEST_CASE("semialternating search on a single bicolored pair") {
    std::vector<Line> lines = {
        Line::slope_intercept(Rat(1), Rat(0), Color::Blue),
        Line::slope_intercept(Rat(-1), Rat(0), Color::Red)};
    SemiSearchResult r =
        find_semialternating(lines, SemiMode::Semialternating, false);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->size() == 2);
    CHECK(validate_witness(lines, *r.witness, SemiMode::Semialternating).ok);
}

TEST_CASE("parallel sets appear as level-zero monotone witnesses in the dual") {
    ParallelUpperResult built = build_parallel_upper(8);
    REQUIRE(built.certificate.all_passed());
    ParallelSetResult primal = max_parallel_set(built.points);
    CHECK(primal.size <= 3);
    CHECK(primal.size >= 1);

    ColoredPointSet pts = built.points;
    std::vector<Line> duals = dual_lines(pts);
    SemiSearchResult dual_search = find_semialternating(
        duals, SemiMode::MSemialternating, true, 0, 600.0);
    REQUIRE(dual_search.complete);
    int dual_k =
        dual_search.witness ? dual_search.witness->size() / 2 : 0;
    CHECK(dual_k == primal.size);
}

TEST_CASE("max parallel set on tiny instances matches the dual search") {
    for (int t = 0; t < 8; ++t) {
        OneAvoidingInstance inst = random_one_avoiding(3, 2600 + t);
        ColoredPointSet ps = inst.points;
        ParallelSetResult primal = max_parallel_set(ps);
        std::vector<Line> duals = dual_lines(ensure_distinct_x(ps));
        SemiSearchResult dual_search = find_semialternating(
            duals, SemiMode::MSemialternating, true, 0, 600.0);
        REQUIRE(dual_search.complete);
        int dual_k = dual_search.witness ? dual_search.witness->size() / 2 : 0;
        CHECK(primal.size == dual_k);
    }
}

TEST_CASE("max parallel set of one blue and one red is one") {
    ColoredPointSet ps;
    ps.points = {Point(Rat(-3), Rat(1), Color::Red),
                 Point(Rat(4), Rat(2), Color::Blue)};
    ParallelSetResult r = max_parallel_set(ps);
    CHECK(r.size == 1);
    REQUIRE(r.witness_lines.size() == 2);
}

TEST_CASE("decomposition splits witnesses by level steps") {
    // Find M-semialternating witnesses on small color-separable duals and
    // split them; both parts revalidate and the sizes add up.
    int decomposed = 0;
    for (int t = 0; t < 10 && decomposed < 4; ++t) {
        OneAvoidingInstance inst = random_one_avoiding(4, 4400 + t);
        ColoredPointSet pts = ensure_distinct_x(inst.points);
        std::vector<Line> duals = dual_lines(pts);
        SemiSearchResult r =
            find_semialternating(duals, SemiMode::MSemialternating, true);
        if (!r.witness) continue;
        const SemiWitness& w = *r.witness;
        DecomposeResult d = decompose_ssORps(duals, w);
        CHECK(d.parallel_part.size() + d.spoke_part.size() == w.size());
        if (d.parallel_part.size() > 0) {
            CHECK(validate_witness(duals, d.parallel_part,
                                   SemiMode::MSemialternating)
                      .ok);
            std::vector<int> ls = level_sequence(d.parallel_part);
            for (std::size_t i = 0; i + 1 < ls.size(); ++i)
                CHECK(ls[i] < ls[i + 1]);
        }
        if (d.spoke_part.size() > 0) {
            CHECK(validate_witness(duals, d.spoke_part, SemiMode::SpokePath).ok);
        }
        // The larger part carries at least a quarter of the lines.
        CHECK(std::max(d.parallel_part.size(), d.spoke_part.size()) * 2 >=
              w.size() / 2);
        ++decomposed;
    }
    CHECK(decomposed > 0);
}

TEST_CASE("semialternating witnesses reduce to monotone ones") {
    int reduced = 0;
    for (int t = 0; t < 12 && reduced < 4; ++t) {
        OneAvoidingInstance inst = random_one_avoiding(3 + t % 2, 5500 + t);
        ColoredPointSet pts = ensure_distinct_x(inst.points);
        std::vector<Line> duals = dual_lines(pts);
        SemiSearchResult r =
            find_semialternating(duals, SemiMode::Semialternating, true);
        if (!r.witness) continue;
        SemiWitness m = semi_to_M(duals, *r.witness);
        CHECK(validate_witness(duals, m, SemiMode::MSemialternating).ok);
        CHECK(2 * m.size() >= r.witness->size());
        ++reduced;
    }
    CHECK(reduced > 0);
}

TEST_CASE("rotation steps make level sequences strictly increasing") {
    int exercised = 0;
    for (int t = 0; t < 20 && exercised < 3; ++t) {
        OneAvoidingInstance inst = random_one_avoiding(4, 6600 + t);
        ColoredPointSet pts = ensure_distinct_x(inst.points);
        std::vector<Line> duals = dual_lines(pts);
        // Witnesses starting above level zero necessarily repeat a level.
        SemiSearchResult r =
            find_semialternating(duals, SemiMode::MSemialternating, true, 2);
        if (!r.witness) continue;
        std::vector<Line> lines = duals;
        SemiWitness w = *r.witness;
        auto distinct_levels = [](const SemiWitness& wit) {
            std::vector<int> ls = level_sequence(wit);
            std::sort(ls.begin(), ls.end());
            return std::unique(ls.begin(), ls.end()) - ls.begin();
        };
        for (int step = 0; step < 32; ++step) {
            std::vector<int> ls = level_sequence(w);
            bool strictly = true;
            for (std::size_t i = 0; i + 1 < ls.size(); ++i)
                if (ls[i] >= ls[i + 1]) strictly = false;
            if (strictly) break;
            auto before = distinct_levels(w);
            auto rot = rotate_step_decrease(lines, w);
            REQUIRE(rot.has_value());
            lines = rot->lines;
            w = rot->witness;
            CHECK(validate_witness(lines, w, SemiMode::MSemialternating).ok);
            CHECK(distinct_levels(w) > before);
            ++exercised;
        }
    }
    CHECK(exercised > 0);
}

TEST_CASE("wheels") {
    // A centrally interleaved hexagon is a wheel of size six around the
    // origin.
    ColoredPointSet hex;
    hex.points = {Point(Rat(1), Rat(5)),   Point(Rat(2), Rat(3)),
                  Point(Rat(4), Rat(1)),   Point(Rat(-1), Rat(-4)),
                  Point(Rat(-2), Rat(-2)), Point(Rat(-5), Rat(-1))};
    WheelResult r =
        largest_wheel(hex, false, {Point(Rat(1, 7), Rat(1, 13))});
    CHECK(r.size == 6);

    // A wheel of size k implies a spoke set of size k/2.
    SpokeSetResult ss = max_spoke_set(hex);
    CHECK(ss.size >= r.size / 2);
}

TEST_CASE("alternating wheels respect colors") {
    ColoredPointSet hex;
    hex.points = {Point(Rat(1), Rat(5), Color::Blue),
                  Point(Rat(2), Rat(3), Color::Blue),
                  Point(Rat(4), Rat(1), Color::Blue),
                  Point(Rat(-1), Rat(-4), Color::Red),
                  Point(Rat(-2), Rat(-2), Color::Red),
                  Point(Rat(-5), Rat(-1), Color::Red)};
    WheelResult r =
        largest_wheel(hex, true, {Point(Rat(1, 7), Rat(1, 13))});
    CHECK(r.size == 6);  // sides and colors alternate together here
    for (std::size_t i = 0; i + 1 < r.order.size(); ++i)
        CHECK(hex[r.order[i]].color != hex[r.order[i + 1]].color);
}

TEST_CASE("validate_witness rejects malformed witnesses") {
    std::vector<Line> lines = {
        Line::slope_intercept(Rat(1), Rat(0), Color::Blue),
        Line::slope_intercept(Rat(-1), Rat(0), Color::Red)};
    SemiWitness w;
    w.member_lines = {0, 1};
    w.crossing_order = {0, 0};
    w.start_above_mask = 0;
    w.cell_masks = {0, 1, 0};
    CHECK(!validate_witness(lines, w, SemiMode::Semialternating).ok);
}
