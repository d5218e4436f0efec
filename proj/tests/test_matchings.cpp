#include <doctest.h>

#include <algorithm>

#include "crossfam/constructions.hpp"
#include "crossfam/matchings.hpp"

using namespace crossfam;

TEST_CASE("single-pair matching") {
    ColoredPointSet ps;
    ps.points = {Point(Rat(5), Rat(0), Color::Blue),
                 Point(Rat(-5), Rat(1), Color::Red)};
    Partition2 part;
    part.set_a = {0};
    part.set_b = {1};
    Matching m = non_crossing_bicolored_matching(ps, part);
    REQUIRE(m.pairs.size() == 1);
    CHECK(m.pairs[0] == std::pair<int, int>{1, 0});
}

TEST_CASE("rotating-line matchings are perfect and non-crossing") {
    for (int t = 0; t < 10; ++t) {
        int side = t < 7 ? 5 + t : 20;
        OneAvoidingInstance inst = random_one_avoiding(side, 7400 + t);
        Matching m = non_crossing_bicolored_matching(inst.points, inst.partition);
        REQUIRE(static_cast<int>(m.pairs.size()) == side);
        std::vector<bool> used_r(inst.points.size(), false);
        std::vector<bool> used_b(inst.points.size(), false);
        for (auto [r, b] : m.pairs) {
            CHECK(!used_r[r]);
            CHECK(!used_b[b]);
            used_r[r] = used_b[b] = true;
        }
        int crossings = 0;
        for (std::size_t i = 0; i < m.pairs.size(); ++i)
            for (std::size_t j = i + 1; j < m.pairs.size(); ++j) {
                Segment s1(m.pairs[i].first, m.pairs[i].second);
                Segment s2(m.pairs[j].first, m.pairs[j].second);
                if (classify_pair(s1, s2, inst.points) ==
                    PairRelation::Crossing)
                    ++crossings;
            }
        CHECK(crossings == 0);
    }
}

TEST_CASE("ham sandwich cuts bisect both colors") {
    // Two of each color in convex position.
    ColoredPointSet small;
    small.points = {Point(Rat(0), Rat(0), Color::Red),
                    Point(Rat(4), Rat(1), Color::Red),
                    Point(Rat(1), Rat(3), Color::Blue),
                    Point(Rat(3), Rat(-2), Color::Blue)};
    Line cut = ham_sandwich_cut(small);
    int ra = 0, rb = 0, ba = 0, bb = 0;
    for (const Point& p : small.points) {
        int s = cut.side_of(p);
        if (p.color == Color::Red) (s > 0 ? ra : rb) += s != 0 ? 1 : 0;
        else (s > 0 ? ba : bb) += s != 0 ? 1 : 0;
    }
    CHECK(ra <= 1);
    CHECK(rb <= 1);
    CHECK(ba <= 1);
    CHECK(bb <= 1);

    // Larger random bicolored sets.
    for (int t = 0; t < 10; ++t) {
        ColoredPointSet ps = random_point_set(20, 8800 + t, 500);
        for (std::size_t i = 0; i < ps.size(); ++i)
            ps[i].color = i < 10 ? Color::Red : Color::Blue;
        Line cut2 = ham_sandwich_cut(ps);
        int above_r = 0, below_r = 0, above_b = 0, below_b = 0;
        for (const Point& p : ps.points) {
            int s = cut2.side_of(p);
            if (s == 0) continue;
            if (p.color == Color::Red) (s > 0 ? above_r : below_r) += 1;
            else (s > 0 ? above_b : below_b) += 1;
        }
        CHECK(above_r <= 5);
        CHECK(below_r <= 5);
        CHECK(above_b <= 5);
        CHECK(below_b <= 5);
    }

    // All red left, all blue right.
    ColoredPointSet split;
    for (int i = 0; i < 4; ++i)
        split.points.emplace_back(Rat(-10 - i), Rat(i * i + i) + Rat(1, 3),
                                  Color::Red);
    for (int i = 0; i < 4; ++i)
        split.points.emplace_back(Rat(10 + i), Rat(i * i - 2 * i) + Rat(1, 7),
                                  Color::Blue);
    REQUIRE(is_general_position(split).ok);
    Line cut3 = ham_sandwich_cut(split);
    int above_r = 0, below_r = 0, above_b = 0, below_b = 0;
    for (const Point& p : split.points) {
        int s = cut3.side_of(p);
        if (s == 0) continue;
        if (p.color == Color::Red) (s > 0 ? above_r : below_r) += 1;
        else (s > 0 ? above_b : below_b) += 1;
    }
    CHECK(above_r <= 2);
    CHECK(below_r <= 2);
    CHECK(above_b <= 2);
    CHECK(below_b <= 2);
}

TEST_CASE("stabbing family on four convex points") {
    ColoredPointSet ps;
    ps.points = {Point(Rat(0), Rat(0)), Point(Rat(4), Rat(1)),
                 Point(Rat(3), Rat(5)), Point(Rat(-1), Rat(4))};
    Family f = stabbing_family_general(ps);
    CHECK(f.size() == 2);
    CHECK(verify_family(f, ps).ok);
}

TEST_CASE("stabbing families are exact-size with no parallel pairs") {
    for (int t = 0; t < 8; ++t) {
        int n = 4 + 2 * (t % 4);
        ColoredPointSet ps = random_point_set(2 * n, 9900 + t, 400);
        Family f = stabbing_family_general(ps);
        CHECK(static_cast<int>(f.size()) == n);
        CHECK(verify_family(f, ps).ok);
        for (std::size_t i = 0; i < f.segments.size(); ++i)
            for (std::size_t j = i + 1; j < f.segments.size(); ++j) {
                PairRelation r =
                    classify_pair(f.segments[i], f.segments[j], ps);
                CHECK(r != PairRelation::Parallel);
                CHECK(r != PairRelation::Degenerate);
            }
    }
}

TEST_CASE("relation exchange audit between the matching and the family") {
    // The stabbing construction's matching lives in the transformed plane;
    // segment by segment the relations swap crossing <-> parallel.
    ColoredPointSet ps = random_point_set(12, 31337, 300);
    Rat rc, rs, shift;
    ColoredPointSet halved = halving_translate(ps, rc, rs, shift);
    for (std::size_t i = 0; i < halved.size(); ++i)
        halved[i].color = sign(halved[i].x) > 0 ? Color::Blue : Color::Red;
    ColoredPointSet transformed = rotate90_transform(halved);
    Matching m = recursive_ham_sandwich_matching(transformed);
    REQUIRE(m.pairs.size() == 6);
    for (std::size_t i = 0; i < m.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < m.pairs.size(); ++j) {
            Segment s1(m.pairs[i].first, m.pairs[i].second);
            Segment s2(m.pairs[j].first, m.pairs[j].second);
            PairRelation in_transformed = classify_pair(s1, s2, transformed);
            PairRelation in_original = classify_pair(s1, s2, halved);
            CHECK(in_transformed != PairRelation::Crossing);
            switch (in_transformed) {
                case PairRelation::Parallel:
                    CHECK(in_original == PairRelation::Crossing);
                    break;
                case PairRelation::FirstStabsSecond:
                    CHECK(in_original == PairRelation::SecondStabsFirst);
                    break;
                case PairRelation::SecondStabsFirst:
                    CHECK(in_original == PairRelation::FirstStabsSecond);
                    break;
                default:
                    break;
            }
        }
}

TEST_CASE("one-avoiding inputs reach stabbing families along both routes") {
    OneAvoidingInstance inst = random_one_avoiding(5, 2024);
    // Route one: the general construction.
    Family general = stabbing_family_general(inst.points);
    CHECK(static_cast<int>(general.size()) == 5);

    // Route two: transform and use the rotating-line matching directly.
    Rat rc, rs, shift;
    ColoredPointSet halved = halving_translate(inst.points, rc, rs, shift);
    for (std::size_t i = 0; i < halved.size(); ++i)
        halved[i].color = sign(halved[i].x) > 0 ? Color::Blue : Color::Red;
    ColoredPointSet transformed = rotate90_transform(halved);
    Partition2 part;
    for (std::size_t i = 0; i < transformed.size(); ++i)
        (transformed[i].color == Color::Blue ? part.set_a : part.set_b)
            .push_back(static_cast<int>(i));
    if (is_one_avoiding(transformed, part)) {
        Matching m = non_crossing_bicolored_matching(transformed, part);
        Family f;
        f.relation = FamilyRelation::StabOrCross;
        for (auto [r, b] : m.pairs) f.segments.emplace_back(r, b);
        CHECK(verify_family(f, halved).ok);
    }
}
