#include <doctest.h>

#include "crossfam/arrangements.hpp"
#include "crossfam/constructions.hpp"
#include "crossfam/crossing_solvers.hpp"
#include "crossfam/duality.hpp"

using namespace crossfam;

TEST_CASE("the 4k template at k = 1") {
    DiskConstruction c = build_nover4(1, 0);
    CHECK(c.certificate.all_passed());
    CHECK(c.points.size() == 4);
    // Non-convex position: one point inside the others' triangle.
    CHECK(convex_hull(c.points).size() == 3);
    SolveResult r = max_pairwise_family(c.points, FamilyRelation::Crossing);
    CHECK(r.family.size() == 1);
}

TEST_CASE("the 4k template bound at k = 2") {
    DiskConstruction c = build_nover4(2, 0);
    CHECK(c.certificate.all_passed());
    CHECK(c.points.size() == 8);
    SolveResult r = max_pairwise_family(c.points, FamilyRelation::Crossing);
    CHECK(r.complete);
    CHECK(r.family.size() <= 2);
}

TEST_CASE("blow-up counting and certificates") {
    ColoredPointSet tri;
    tri.points = {Point(Rat(0), Rat(0)), Point(Rat(4), Rat(0)),
                  Point(Rat(1), Rat(3))};
    BlowUpResult b = blow_up(tri, 6, 0);
    CHECK(b.points.size() == 6);
    CHECK(b.certificate.all_passed());
    int c0 = 0, c1 = 0, c2 = 0;
    for (int o : b.origin) (o == 0 ? c0 : o == 1 ? c1 : c2) += 1;
    CHECK(c0 == 2);
    CHECK(c1 == 2);
    CHECK(c2 == 2);

    BlowUpResult b7 = blow_up(tri, 7, 0);
    CHECK(b7.points.size() == 7);
    CHECK(b7.certificate.all_passed());
}

TEST_CASE("parallel-set upper construction certificates") {
    for (int n : {8, 12}) {
        ParallelUpperResult r = build_parallel_upper(n);
        CHECK(r.certificate.all_passed());
        CHECK(static_cast<int>(r.points.size()) == n);
        CHECK(is_one_avoiding(r.points, r.partition));
    }
    CHECK_THROWS_AS(build_parallel_upper(10), std::invalid_argument);
}

TEST_CASE("focal construction heights follow the recurrence") {
    FocalConstantResult r = build_focal_constant(4);
    REQUIRE(r.red_heights.size() == 4);
    CHECK(r.red_heights[0] == 1);
    CHECK(r.red_heights[1] == 2);
    // y_3 sits half a unit above the d_2/b_n crossing at 1 + (2-1)*3 = 4.
    CHECK(r.red_heights[2] == Rat(9, 2));
    // y_4 = 1 + (9/2 - 1)*3 + 1/2.
    CHECK(r.red_heights[3] == Rat(1) + Rat(7, 2) * 3 + Rat(1, 2));
    CHECK(r.certificate.all_passed());
}

TEST_CASE("focal construction duals are mutually avoiding") {
    for (int n : {4, 6}) {
        FocalConstantResult r = build_focal_constant(n);
        CHECK(r.certificate.all_passed());
        CHECK(mutually_avoiding(r.dual_points, r.partition.set_a,
                                r.partition.set_b));
    }
}

TEST_CASE("focal parallel sets stay constant over n") {
    std::vector<int> sizes;
    for (int n : {6, 8, 10}) {
        FocalConstantResult r = build_focal_constant(n);
        REQUIRE(r.certificate.all_passed());
        sizes.push_back(max_focal_parallel_set(r.dual_points));
    }
    // The bound is a constant independent of n: the exhaustive line search
    // reports the same size at every n.
    CHECK(sizes[0] >= 1);
    CHECK(sizes[0] == sizes[1]);
    CHECK(sizes[1] == sizes[2]);
    CHECK(sizes[0] <= 6);
}

TEST_CASE("the 24-point configuration passes its certificate") {
    DiskConstruction c = build_24_config(1, 0);
    CHECK(c.certificate.all_passed());
    if (!c.certificate.all_passed()) {
        MESSAGE("first failure: ", c.certificate.first_failure());
    }
    CHECK(c.points.size() == 24);
}

TEST_CASE("random generators are well-formed") {
    ColoredPointSet ps = random_point_set(30, 5, 100000);
    CHECK(is_general_position(ps).ok);

    OneAvoidingInstance inst = random_one_avoiding(10, 6);
    CHECK(is_one_avoiding(inst.points, inst.partition));
    CHECK(is_general_position(inst.points).ok);

    BarStack b = random_barstack_nn(8, 7);
    CHECK(b.height_count() == 8);
}
