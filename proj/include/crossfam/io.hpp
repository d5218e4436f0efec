#ifndef CROSSFAM_IO_HPP
#define CROSSFAM_IO_HPP

#include <map>
#include <string>
#include <vector>

#include "crossfam/barstacks.hpp"
#include "crossfam/crossing_solvers.hpp"

namespace crossfam {

struct PointSetDocument {
    ColoredPointSet points;
    std::map<std::string, std::string> meta;  // name, seed, construction, ...
};

// Lossless JSON round-trips; rationals travel as reduced "p/q" strings.
// Schema violations raise std::invalid_argument with a path-precise message.
std::string serialize_point_set(const PointSetDocument& doc);
PointSetDocument parse_point_set(const std::string& json_text);

std::string serialize_lines(const std::vector<Line>& lines);
std::vector<Line> parse_lines(const std::string& json_text);

std::string serialize_barstack(const BarStack& b, const WireSequence& w);
std::pair<BarStack, WireSequence> parse_barstack(const std::string& json_text);

std::string serialize_table(const std::vector<std::vector<int>>& rows);
std::vector<std::vector<int>> parse_table(const std::string& json_text);

std::string serialize_family(const Family& f);
Family parse_family(const std::string& json_text);

// Deterministic SVG snapshots in the paper's figure styles.
std::string render_svg_points(const ColoredPointSet& ps,
                              const std::vector<Segment>& segments = {});
std::string render_svg_lines(const std::vector<Line>& lines);
std::string render_svg_barstack(const BarStack& b, const WireSequence& w,
                                const Marbling* marbling = nullptr);

// One reproducible report per CLI run; the result section is byte-stable for
// identical (command, input, seed, caps).
struct RunReport {
    std::string command;
    std::string input_digest;
    std::string result_json;   // canonical
    bool certificates_ok = true;
    bool complete = true;
    double seconds = 0.0;

    std::string to_json() const;
};

std::string digest(const std::string& payload);  // FNV-1a hex

}  // namespace crossfam

#endif
