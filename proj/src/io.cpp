#include "crossfam/io.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace crossfam {

using nlohmann::json;

namespace {

Color color_from_string(const std::string& s, const std::string& where) {
    if (s == "red") return Color::Red;
    if (s == "blue") return Color::Blue;
    if (s == "none") return Color::None;
    throw std::invalid_argument(where + ": unknown color '" + s + "'");
}

}  // namespace

std::string serialize_point_set(const PointSetDocument& doc) {
    json j;
    j["points"] = json::array();
    for (const Point& p : doc.points.points) {
        json jp;
        jp["x"] = rat_to_string(p.x);
        jp["y"] = rat_to_string(p.y);
        jp["color"] = color_name(p.color);
        j["points"].push_back(jp);
    }
    j["meta"] = doc.meta;
    return j.dump(2);
}

PointSetDocument parse_point_set(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument("points: missing or not an array");
    PointSetDocument doc;
    int idx = 0;
    for (const auto& jp : j["points"]) {
        std::string where = "points[" + std::to_string(idx) + "]";
        if (!jp.contains("x") || !jp.contains("y"))
            throw std::invalid_argument(where + ": missing coordinate");
        Point p;
        p.x = parse_rat(jp["x"].get<std::string>());
        p.y = parse_rat(jp["y"].get<std::string>());
        p.color = jp.contains("color")
                      ? color_from_string(jp["color"].get<std::string>(), where)
                      : Color::None;
        doc.points.points.push_back(p);
        ++idx;
    }
    if (j.contains("meta"))
        for (auto& [k, v] : j["meta"].items())
            doc.meta[k] = v.get<std::string>();
    return doc;
}

std::string serialize_lines(const std::vector<Line>& lines) {
    json j;
    j["lines"] = json::array();
    for (const Line& l : lines) {
        json jl;
        if (l.vertical) {
            jl["x"] = rat_to_string(l.b);
        } else {
            jl["a"] = rat_to_string(l.a);
            jl["b"] = rat_to_string(l.b);
        }
        jl["color"] = color_name(l.color);
        j["lines"].push_back(jl);
    }
    return j.dump(2);
}

std::vector<Line> parse_lines(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("lines") || !j["lines"].is_array())
        throw std::invalid_argument("lines: missing or not an array");
    std::vector<Line> out;
    int idx = 0;
    for (const auto& jl : j["lines"]) {
        std::string where = "lines[" + std::to_string(idx) + "]";
        Color c = jl.contains("color")
                      ? color_from_string(jl["color"].get<std::string>(), where)
                      : Color::None;
        if (jl.contains("x")) {
            out.push_back(
                Line::vertical_at(parse_rat(jl["x"].get<std::string>()), c));
        } else {
            if (!jl.contains("a") || !jl.contains("b"))
                throw std::invalid_argument(where + ": missing slope/intercept");
            out.push_back(
                Line::slope_intercept(parse_rat(jl["a"].get<std::string>()),
                                      parse_rat(jl["b"].get<std::string>()), c));
        }
        ++idx;
    }
    return out;
}

std::string serialize_barstack(const BarStack& b, const WireSequence& w) {
    json j;
    j["n"] = b.pillars;
    j["bars"] = json::array();
    for (auto [a, bb] : b.bars) j["bars"].push_back({a, bb});
    j["wires"] = w.levels;
    return j.dump(2);
}

std::pair<BarStack, WireSequence> parse_barstack(const std::string& text) {
    json j = json::parse(text);
    BarStack b;
    WireSequence w;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("n: missing pillar count");
    b.pillars = j["n"].get<int>();
    if (!j.contains("bars") || !j["bars"].is_array())
        throw std::invalid_argument("bars: missing or not an array");
    int idx = 0;
    for (const auto& jb : j["bars"]) {
        if (!jb.is_array() || jb.size() != 2)
            throw std::invalid_argument("bars[" + std::to_string(idx) +
                                        "]: expected [a, b]");
        b.bars.push_back({jb[0].get<int>(), jb[1].get<int>()});
        ++idx;
    }
    validate_barstack(b);
    if (j.contains("wires"))
        for (const auto& jw : j["wires"]) w.levels.push_back(jw.get<int>());
    for (int lvl : w.levels)
        if (lvl < 0 || lvl > b.height_count())
            throw std::invalid_argument("wires: level out of range");
    return {b, w};
}

std::string serialize_table(const std::vector<std::vector<int>>& rows) {
    json j = rows;
    return j.dump();
}

std::vector<std::vector<int>> parse_table(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("table: expected an array");
    return j.get<std::vector<std::vector<int>>>();
}

std::string serialize_family(const Family& f) {
    json j;
    j["relation"] = family_relation_name(f.relation);
    j["segments"] = json::array();
    for (const Segment& s : f.segments) j["segments"].push_back({s.i, s.j});
    return j.dump(2);
}

Family parse_family(const std::string& text) {
    json j = json::parse(text);
    Family f;
    std::string rel = j.value("relation", "crossing");
    if (rel == "parallel") f.relation = FamilyRelation::Parallel;
    else if (rel == "stab-or-cross") f.relation = FamilyRelation::StabOrCross;
    else if (rel == "crossing") f.relation = FamilyRelation::Crossing;
    else throw std::invalid_argument("relation: unknown value '" + rel + "'");
    if (!j.contains("segments") || !j["segments"].is_array())
        throw std::invalid_argument("segments: missing or not an array");
    for (const auto& js : j["segments"]) {
        if (!js.is_array() || js.size() != 2)
            throw std::invalid_argument("segments: expected [i, j] pairs");
        f.segments.emplace_back(js[0].get<int>(), js[1].get<int>());
    }
    return f;
}

namespace {

struct Viewport {
    double minx = 0, miny = 0, maxx = 1, maxy = 1;
    void grow(double x, double y) {
        minx = std::min(minx, x);
        miny = std::min(miny, y);
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
    }
    double width() const { return maxx - minx; }
    double height() const { return maxy - miny; }
};

std::string svg_open(const Viewport& v) {
    std::ostringstream os;
    double pad = std::max(v.width(), v.height()) * 0.05 + 1;
    os << std::fixed << std::setprecision(4);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << (v.minx - pad) << " " << (-(v.maxy + pad)) << " "
       << (v.width() + 2 * pad) << " " << (v.height() + 2 * pad) << "\">\n";
    return os.str();
}

const char* svg_color(Color c) {
    switch (c) {
        case Color::Red: return "#cc2222";
        case Color::Blue: return "#2244cc";
        default: return "#333333";
    }
}

}  // namespace

std::string render_svg_points(const ColoredPointSet& ps,
                              const std::vector<Segment>& segments) {
    Viewport v;
    for (const Point& p : ps.points) v.grow(rat_to_double(p.x), rat_to_double(p.y));
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << svg_open(v);
    double r = std::max(v.width(), v.height()) / 120 + 0.01;
    for (const Segment& s : segments) {
        const Point& a = ps[s.i];
        const Point& b = ps[s.j];
        os << "<line x1=\"" << rat_to_double(a.x) << "\" y1=\""
           << -rat_to_double(a.y) << "\" x2=\"" << rat_to_double(b.x)
           << "\" y2=\"" << -rat_to_double(b.y)
           << "\" stroke=\"#555555\" stroke-width=\"" << r / 3 << "\"/>\n";
    }
    for (const Point& p : ps.points)
        os << "<circle cx=\"" << rat_to_double(p.x) << "\" cy=\""
           << -rat_to_double(p.y) << "\" r=\"" << r << "\" fill=\""
           << svg_color(p.color) << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_svg_lines(const std::vector<Line>& lines) {
    Viewport v;
    for (const Line& l : lines) {
        if (l.vertical) {
            v.grow(rat_to_double(l.b), -10);
            v.grow(rat_to_double(l.b), 10);
        } else {
            v.grow(-10, rat_to_double(l.a) * -10 + rat_to_double(l.b));
            v.grow(10, rat_to_double(l.a) * 10 + rat_to_double(l.b));
        }
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << svg_open(v);
    double w = std::max(v.width(), v.height()) / 300 + 0.01;
    for (const Line& l : lines) {
        double x1, y1, x2, y2;
        if (l.vertical) {
            x1 = x2 = rat_to_double(l.b);
            y1 = v.miny - 1;
            y2 = v.maxy + 1;
        } else {
            x1 = v.minx - 1;
            x2 = v.maxx + 1;
            y1 = rat_to_double(l.a) * x1 + rat_to_double(l.b);
            y2 = rat_to_double(l.a) * x2 + rat_to_double(l.b);
        }
        os << "<line x1=\"" << x1 << "\" y1=\"" << -y1 << "\" x2=\"" << x2
           << "\" y2=\"" << -y2 << "\" stroke=\"" << svg_color(l.color)
           << "\" stroke-width=\"" << w << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_svg_barstack(const BarStack& b, const WireSequence& w,
                                const Marbling* marbling) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    Viewport v;
    v.grow(0, 0);
    v.grow(b.pillars + 1, b.height_count() + 1);
    os << svg_open(v);
    for (int x = 1; x <= b.pillars; ++x)
        os << "<line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\""
           << -(b.height_count() + 1)
           << "\" stroke=\"#bbbbbb\" stroke-width=\"0.02\" "
              "stroke-dasharray=\"0.1,0.1\"/>\n";
    for (int h = 1; h <= b.height_count(); ++h)
        os << "<line x1=\"" << b.bars[h - 1].first << "\" y1=\"" << -h
           << "\" x2=\"" << b.bars[h - 1].second << "\" y2=\"" << -h
           << "\" stroke=\"#cc2222\" stroke-width=\"0.08\"/>\n";
    // Wires between bar levels; stacked slots of one level are offset.
    std::map<int, int> level_seen;
    for (std::size_t s = 0; s < w.levels.size(); ++s) {
        int lvl = w.levels[s];
        double y = lvl + 0.5 + 0.12 * level_seen[lvl]++;
        os << "<line x1=\"0.2\" y1=\"" << -y << "\" x2=\"" << (b.pillars + 0.8)
           << "\" y2=\"" << -y
           << "\" stroke=\"#2244cc\" stroke-width=\"0.04\"/>\n";
    }
    if (marbling) {
        std::map<int, int> seen2;
        std::vector<double> slot_y(w.levels.size());
        for (std::size_t s = 0; s < w.levels.size(); ++s)
            slot_y[s] = w.levels[s] + 0.5 + 0.12 * seen2[w.levels[s]]++;
        for (std::size_t p = 0; p < marbling->slot_of.size(); ++p) {
            int s = marbling->slot_of[p];
            if (s < 0) continue;
            os << "<circle cx=\"" << (p + 1) << "\" cy=\"" << -slot_y[s]
               << "\" r=\"0.15\" fill=\"#111111\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::string digest(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string RunReport::to_json() const {
    json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["result"] = json::parse(result_json.empty() ? "{}" : result_json);
    j["certificates_ok"] = certificates_ok;
    j["complete"] = complete;
    j["seconds"] = seconds;
    return j.dump(2);
}

}  // namespace crossfam
