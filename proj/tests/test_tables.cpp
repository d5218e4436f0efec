#include <doctest.h>

#include <algorithm>

#include "crossfam/constructions.hpp"
#include "crossfam/tables.hpp"

using namespace crossfam;

namespace {

// A straight-line realization of the table from the four-line figure:
// blue horizontals y = 4..1, reds through (p_i, 4) with slopes 1/q_i.
std::vector<Line> fig4_blues() {
    std::vector<Line> blues;
    for (int y = 4; y >= 1; --y)
        blues.push_back(Line::slope_intercept(Rat(0), Rat(y), Color::Blue));
    return blues;
}

std::vector<Line> fig4_reds() {
    std::vector<Rat> q = {Rat(-2), Rat(-5, 4), Rat(-6, 5), Rat(-119, 100)};
    std::vector<Line> reds;
    for (int i = 0; i < 4; ++i) {
        Rat slope = 1 / q[i];
        // Through (i, 4).
        reds.push_back(
            Line::slope_intercept(slope, Rat(4) - slope * Rat(i), Color::Red));
    }
    return reds;
}

}  // namespace

TEST_CASE("figure-four table rows") {
    PermTable t = build_table_from_lines(fig4_blues(), fig4_reds());
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(t.rows[1] == std::vector<int>{1, 2, 3, 4});
    CHECK(t.rows[2] == std::vector<int>{2, 1, 3, 4});
    CHECK(t.rows[3] == std::vector<int>{2, 3, 1, 4});
}

TEST_CASE("figure-four table admits the full distinct diagonal") {
    PermTable t = build_table_from_lines(fig4_blues(), fig4_reds());
    auto res = find_distinct_diagonal(t, 4);
    REQUIRE(res.has_value());
    CHECK(res->diagonal == std::vector<int>{1, 2, 3, 4});
    CHECK(res->row_positions == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("single blue and red give a one-cell table") {
    std::vector<Line> blues = {Line::slope_intercept(Rat(0), Rat(1))};
    std::vector<Line> reds = {Line::slope_intercept(Rat(1), Rat(0))};
    PermTable t = build_table_from_lines(blues, reds);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0] == std::vector<int>{1});
}

TEST_CASE("distinct diagonal of size one is the first entry") {
    PermTable t = table_from_rows({{2, 1, 3}, {3, 2, 1}});
    auto res = find_distinct_diagonal(t, 1);
    REQUIRE(res.has_value());
    CHECK(res->diagonal == std::vector<int>{2});
    CHECK(res->row_positions == std::vector<int>{0});
}

TEST_CASE("tables of 1-avoiding sets step by increasing-substring reversals") {
    for (int t = 0; t < 10; ++t) {
        OneAvoidingInstance inst = random_one_avoiding(6, 1200 + t);
        PermTable table = build_table(inst.points, inst.partition);
        REQUIRE(table.rows.size() == 6);
        for (const auto& row : table.rows) {
            std::vector<int> sorted = row;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5, 6});
        }
        for (std::size_t r = 0; r + 1 < table.rows.size(); ++r) {
            if (table.rows[r] == table.rows[r + 1]) continue;
            auto spans = decompose_move(table.rows[r], table.rows[r + 1]);
            CHECK(spans.has_value());
        }
    }
}

TEST_CASE("build_table requires a 1-avoiding input") {
    ColoredPointSet conv;
    conv.points = {Point(Rat(10), Rat(0)),  Point(Rat(5), Rat(9)),
                   Point(Rat(-5), Rat(9)),  Point(Rat(-10), Rat(0)),
                   Point(Rat(-5), Rat(-9)), Point(Rat(5), Rat(-8))};
    Partition2 alt;
    alt.set_a = {0, 2, 4};
    alt.set_b = {1, 3, 5};
    CHECK_THROWS_AS(build_table(conv, alt), std::invalid_argument);
}

TEST_CASE("allowable sequence of three generic points") {
    ColoredPointSet ps;
    ps.points = {Point(Rat(0), Rat(0)), Point(Rat(4), Rat(1)),
                 Point(Rat(1), Rat(3))};
    AllowableSequence seq = allowable_sequence_of(ps);
    CHECK(seq.perms.size() == 4);  // C(3,2) moves
    CHECK(seq.simple);
    AllowableValidation v = validate_allowable(seq);
    CHECK(v.ok);
    CHECK(v.simple);
    std::vector<int> rev(seq.perms.front().rbegin(), seq.perms.front().rend());
    CHECK(seq.perms.back() == rev);
}

TEST_CASE("allowable sequences validate on random sets") {
    for (int t = 0; t < 12; ++t) {
        ColoredPointSet ps = random_point_set(4 + t % 4, 3300 + t, 120);
        AllowableSequence seq = allowable_sequence_of(ps);
        AllowableValidation v = validate_allowable(seq);
        CHECK(v.ok);
    }
}

TEST_CASE("validate_allowable rejects broken sequences") {
    AllowableSequence twice;
    twice.perms = {{1, 2}, {2, 1}, {1, 2}};
    CHECK(!validate_allowable(twice).ok);

    AllowableSequence constant;
    constant.perms = {{1, 2}, {1, 2}};
    AllowableValidation v = validate_allowable(constant);
    CHECK(!v.ok);

    AllowableSequence fine;
    fine.perms = {{1, 2}, {2, 1}};
    CHECK(validate_allowable(fine).ok);
}

TEST_CASE("diagonal rows from a simple allowable sequence") {
    for (int n : {3, 6}) {
        ColoredPointSet ps = random_point_set(n, 40 + n, 300);
        AllowableSequence seq = allowable_sequence_of(ps);
        if (!validate_allowable(seq).simple) continue;
        SimpleDiagonal d = diagonal_from_simple_allowable(seq);
        CHECK(static_cast<int>(d.row_steps.size()) == n - 1);
        CHECK(d.distinct);
        // d_i is the i-th element flipped by 1: the diagonal lists the
        // meeting order of 1 with 2..n.
        std::vector<int> sorted = d.diagonal;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expect;
        for (int e = 2; e <= n; ++e) expect.push_back(e);
        CHECK(sorted == expect);
    }

    // n = 2: a single flip, trivially distinct.
    ColoredPointSet two;
    two.points = {Point(Rat(0), Rat(0)), Point(Rat(3), Rat(1))};
    AllowableSequence seq = allowable_sequence_of(two);
    SimpleDiagonal d = diagonal_from_simple_allowable(seq);
    CHECK(d.row_steps.size() == 1);
    CHECK(d.distinct);
}

TEST_CASE("theta-n2 sequence follows the flip rules at n = 4") {
    auto perms = build_theta_n2_sequence(4);
    REQUIRE(perms.size() == 7);  // floor(n/2)^2 + n - 1
    CHECK(perms[0] == std::vector<int>{1, 2, 3, 4});
    CHECK(perms[1] == std::vector<int>{1, 2, 3, 4});
    CHECK(perms[2] == std::vector<int>{1, 3, 2, 4});  // i=2 swaps 2,3
    CHECK(perms[3] == std::vector<int>{1, 3, 2, 4});
    CHECK(perms[4] == std::vector<int>{4, 3, 2, 1});  // i=4 swaps 1,4
    CHECK(perms[5] == perms[4]);
    CHECK(perms[6] == perms[4]);
}

TEST_CASE("theta-n2 sequences never flip a pair twice") {
    for (int n : {4, 6, 8}) {
        auto perms = build_theta_n2_sequence(n);
        CHECK(static_cast<int>(perms.size()) == (n / 2) * (n / 2) + n - 1);
        std::vector<std::vector<bool>> flipped(n + 1,
                                               std::vector<bool>(n + 1, false));
        for (std::size_t s = 0; s + 1 < perms.size(); ++s) {
            std::vector<int> pos(n + 1);
            std::vector<int> pos2(n + 1);
            for (int i = 0; i < n; ++i) pos[perms[s][i]] = i;
            for (int i = 0; i < n; ++i) pos2[perms[s + 1][i]] = i;
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    bool before = pos[a] < pos[b];
                    bool after = pos2[a] < pos2[b];
                    if (before != after) {
                        CHECK(!flipped[a][b]);
                        flipped[a][b] = true;
                    }
                }
        }
    }
    CHECK_THROWS_AS(build_theta_n2_sequence(5), std::invalid_argument);
}

TEST_CASE("theta-n2 tables admit no full distinct diagonal") {
    for (int n : {4, 6}) {
        PermTable t = table_from_rows(build_theta_n2_sequence(n));
        CHECK(!find_distinct_diagonal(t, n).has_value());
    }
}
