#include <doctest.h>

#include "crossfam/constructions.hpp"
#include "crossfam/io.hpp"

using namespace crossfam;

TEST_CASE("point sets round trip through JSON") {
    PointSetDocument doc;
    doc.points.points = {Point(Rat(1, 2), Rat(-3), Color::Red),
                         Point(Rat(7, 3), Rat(0), Color::Blue),
                         Point(Rat(5), Rat(9, 4))};
    doc.meta["name"] = "sample";
    doc.meta["seed"] = "0";
    std::string text = serialize_point_set(doc);
    PointSetDocument back = parse_point_set(text);
    REQUIRE(back.points.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.points[i] == doc.points[i]);
        CHECK(back.points[i].color == doc.points[i].color);
    }
    CHECK(back.meta.at("name") == "sample");
    // Canonical form is stable.
    CHECK(serialize_point_set(back) == text);
}

TEST_CASE("rationals canonicalize on parse") {
    PointSetDocument doc = parse_point_set(
        R"({"points": [{"x": "2/4", "y": "-6/4", "color": "none"}]})");
    CHECK(rat_to_string(doc.points[0].x) == "1/2");
    CHECK(rat_to_string(doc.points[0].y) == "-3/2");
}

TEST_CASE("schema violations carry the offending path") {
    CHECK_THROWS_WITH_AS(
        parse_point_set(
            R"({"points": [{"x": "1", "y": "2", "color": "green"}]})"),
        "points[0]: unknown color 'green'", std::invalid_argument);
    CHECK_THROWS_AS(parse_point_set(R"({"points": [{"x": "1"}]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_point_set(R"({"points": [{"x": "1/0", "y": "2"}]})"),
                    std::invalid_argument);
}

TEST_CASE("lines and bar stacks round trip") {
    std::vector<Line> lines = {
        Line::slope_intercept(Rat(1, 3), Rat(-2), Color::Blue),
        Line::vertical_at(Rat(5, 2), Color::Red)};
    std::vector<Line> back = parse_lines(serialize_lines(lines));
    REQUIRE(back.size() == 2);
    CHECK(back[0] == lines[0]);
    CHECK(back[1] == lines[1]);
    CHECK(back[1].color == Color::Red);

    BarStack b;
    b.pillars = 3;
    b.bars = {{2, 3}, {1, 3}, {1, 2}};
    WireSequence w{{0, 0, 1}};
    auto [b2, w2] = parse_barstack(serialize_barstack(b, w));
    CHECK(b2.pillars == 3);
    CHECK(b2.bars == b.bars);
    CHECK(w2.levels == w.levels);

    CHECK_THROWS_AS(parse_barstack(R"({"n": 2, "bars": [[1,2],[1,2]]})"),
                    std::invalid_argument);
}

TEST_CASE("svg rendering emits the expected elements") {
    DiskConstruction c = build_nover4(1, 0);
    std::string svg = render_svg_points(c.points);
    // Four discs drawn as four dots.
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++count;
        pos += 7;
    }
    CHECK(count == 4);

    BarStack b;
    b.pillars = 3;
    b.bars = {{2, 3}, {1, 3}, {1, 2}};
    WireSequence w{{0, 0, 1}};
    Marbling m;
    m.slot_of = {2, 0, 1};
    std::string bsvg = render_svg_barstack(b, w, &m);
    int bars = 0, wires = 0, marbles = 0;
    pos = 0;
    while ((pos = bsvg.find("#cc2222", pos)) != std::string::npos) {
        ++bars;
        pos += 6;
    }
    pos = 0;
    while ((pos = bsvg.find("#2244cc", pos)) != std::string::npos) {
        ++wires;
        pos += 6;
    }
    pos = 0;
    while ((pos = bsvg.find("#111111", pos)) != std::string::npos) {
        ++marbles;
        pos += 6;
    }
    CHECK(bars == 3);
    CHECK(wires == 3);
    CHECK(marbles == 3);

    // Determinism: identical inputs give identical bytes.
    CHECK(render_svg_barstack(b, w, &m) == bsvg);
    Family empty;
    std::string psvg = render_svg_points(c.points, empty.segments);
    CHECK(psvg == svg);
}

TEST_CASE("digests and run reports are stable") {
    CHECK(digest("abc") == digest("abc"));
    CHECK(digest("abc") != digest("abd"));
    RunReport rep;
    rep.command = "solve";
    rep.input_digest = digest("x");
    rep.result_json = R"({"size": 3})";
    std::string j1 = rep.to_json();
    rep.seconds = 99.0;  // timing excluded from the result section only
    CHECK(j1 != rep.to_json());
    CHECK(j1.find("\"size\": 3") != std::string::npos);
}
