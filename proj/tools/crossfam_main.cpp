// Command-line surface for the crossing-family toolkit: construction
// generators, exact solvers, verifiers, and SVG rendering.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "crossfam/arrangements.hpp"
#include "crossfam/constructions.hpp"
#include "crossfam/crossing_solvers.hpp"
#include "crossfam/duality.hpp"
#include "crossfam/io.hpp"
#include "crossfam/matchings.hpp"
#include "crossfam/tables.hpp"

using namespace crossfam;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCertificate = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitInput = 4;

std::uint64_t default_seed() {
    const char* env = std::getenv("CROSSFAM_SEED");
    if (!env) return 0;
    return std::strtoull(env, nullptr, 10);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

Partition2 partition_by_color(const ColoredPointSet& ps) {
    Partition2 part;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].color == Color::Blue)
            part.set_a.push_back(static_cast<int>(i));
        else if (ps[i].color == Color::Red)
            part.set_b.push_back(static_cast<int>(i));
    }
    if (part.set_a.empty() || part.set_b.empty())
        throw std::invalid_argument("point set needs both blue and red points");
    return part;
}

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

int finish(RunReport& report, const Timer& timer, int code = kExitOk) {
    report.seconds = timer.seconds();
    std::cout << report.to_json() << "\n";
    return code;
}

std::string cert_json(const ConstructionCertificate& cert) {
    std::string out = "{";
    bool first = true;
    for (const auto& [name, ok] : cert.checks) {
        if (!first) out += ",";
        out += "\"" + name + "\":" + (ok ? "true" : "false");
        first = false;
    }
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact crossing-family toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    double timeout_s = 300.0;
    int cap = 12;
    std::string relation = "crossing";
    std::string mode = "semialternating";
    std::string in_path, out_path, aux_path, what;
    bool ordered = false;
    int count = 0;
    int param_k = 1;
    int param_n = 8;

    app.add_option("--seed", seed, "deterministic seed");
    app.add_option("--timeout-s", timeout_s, "solver budget in seconds");
    app.add_option("--cap", cap, "instance-size cap for exponential searches");

    auto* gen = app.add_subcommand("generate", "build a named construction");
    gen->add_option("what", what,
                    "nover4|config24|parallel-upper|focal|no-semialternating|"
                    "kn-barstack|theta-sequence|random-points|random-one-avoiding")
        ->required();
    gen->add_option("-k", param_k, "template multiplier k");
    gen->add_option("-n", param_n, "size parameter n");
    gen->add_option("--count", count, "point count for random sets");
    gen->add_option("--out", out_path, "write the JSON document here");

    auto* solve = app.add_subcommand("solve", "run an exact search");
    solve->add_option("what", what, "family|spoke|parallel|focal|side-compatible")
        ->required();
    solve->add_option("--in", in_path, "input JSON")->required();
    solve->add_option("--relation", relation, "crossing|parallel|staborcross");
    solve->add_flag("--ordered", ordered, "ordered side compatibility");

    auto* verify = app.add_subcommand("verify", "re-check a family or certificate");
    verify->add_option("what", what, "family|construction")->required();
    verify->add_option("--in", in_path, "point-set JSON");
    verify->add_option("--family", aux_path, "family JSON to check");
    verify->add_option("-k", param_k, "template multiplier k");
    verify->add_option("-n", param_n, "24 checks the 24k configuration");

    auto* table = app.add_subcommand("table", "table of a 1-avoiding point set");
    table->add_option("--in", in_path, "point-set JSON with colors")->required();
    table->add_option("--diagonal", param_k, "search a k x k distinct diagonal");
    table->add_option("--out", out_path, "write the table JSON here");

    auto* barstack = app.add_subcommand("barstack", "bar stack operations");
    barstack->add_option("what", what, "represent|full-marbling|ordered-half|max")
        ->required();
    barstack->add_option("--in", in_path, "lines JSON or bar-stack JSON")
        ->required();
    barstack->add_flag("--ordered", ordered, "ordered side compatibility");
    barstack->add_option("--out", out_path, "write the result JSON here");

    auto* arrange = app.add_subcommand("arrange", "arrangement searches");
    arrange->add_option("what", what, "cells|semialternating|spoke-path")
        ->required();
    arrange->add_option("--in", in_path, "lines JSON")->required();
    arrange->add_option("--mode", mode,
                        "semialternating|msemialternating|mline");
    arrange->add_option("-n", param_n, "spoke path size");

    auto* match = app.add_subcommand("match", "matchings and stabbing families");
    match->add_option("what", what, "non-crossing|stabbing")->required();
    match->add_option("--in", in_path, "point-set JSON")->required();
    match->add_option("--out", out_path, "write the result JSON here");

    auto* render = app.add_subcommand("render", "SVG snapshots");
    render->add_option("--in", in_path, "point set, lines, or bar stack JSON")
        ->required();
    render->add_option("--out", out_path, "output SVG path")->required();

    auto* bench = app.add_subcommand("bench", "solver timing on convex fans");
    bench->add_option("-n", param_n, "points");

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    RunReport report;
    try {
        if (gen->parsed()) {
            report.command = "generate " + what;
            PointSetDocument doc;
            doc.meta["construction"] = what;
            doc.meta["seed"] = std::to_string(seed);
            std::string payload;
            if (what == "nover4" || what == "config24") {
                DiskConstruction c = what == "nover4"
                                         ? build_nover4(param_k, seed)
                                         : build_24_config(param_k, seed);
                doc.points = c.points;
                doc.meta["k"] = std::to_string(param_k);
                payload = serialize_point_set(doc);
                report.certificates_ok = c.certificate.all_passed();
                report.result_json = "{\"points\":" +
                                     std::to_string(c.points.size()) +
                                     ",\"certificate\":" +
                                     cert_json(c.certificate) + "}";
            } else if (what == "parallel-upper") {
                ParallelUpperResult r = build_parallel_upper(param_n);
                doc.points = r.points;
                payload = serialize_point_set(doc);
                report.certificates_ok = r.certificate.all_passed();
                report.result_json =
                    "{\"certificate\":" + cert_json(r.certificate) + "}";
            } else if (what == "focal") {
                FocalConstantResult r = build_focal_constant(param_n);
                payload = serialize_lines(r.lines);
                report.certificates_ok = r.certificate.all_passed();
                report.result_json =
                    "{\"certificate\":" + cert_json(r.certificate) + "}";
            } else if (what == "no-semialternating") {
                NoSemiResult r = build_no_semialternating();
                payload = serialize_lines(r.lines);
                report.certificates_ok = r.certificate.all_passed();
                report.result_json =
                    "{\"certificate\":" + cert_json(r.certificate) + "}";
            } else if (what == "kn-barstack") {
                KnBarStack r = build_kn_barstack(param_n);
                payload = serialize_barstack(r.stack, r.wires);
                report.result_json =
                    "{\"bars\":" + std::to_string(r.stack.height_count()) + "}";
            } else if (what == "theta-sequence") {
                payload = serialize_table(build_theta_n2_sequence(param_n));
                report.result_json = "{}";
            } else if (what == "random-points") {
                doc.points = random_point_set(count ? count : 10, seed);
                payload = serialize_point_set(doc);
                report.result_json = "{}";
            } else if (what == "random-one-avoiding") {
                OneAvoidingInstance inst =
                    random_one_avoiding(count ? count : 5, seed);
                doc.points = inst.points;
                payload = serialize_point_set(doc);
                report.result_json = "{}";
            } else {
                throw std::invalid_argument("unknown construction " + what);
            }
            report.input_digest = digest(payload);
            if (!out_path.empty()) spill(out_path, payload);
            return finish(report, timer,
                          report.certificates_ok ? kExitOk : kExitCertificate);
        }

        if (solve->parsed()) {
            report.command = "solve " + what;
            std::string text = slurp(in_path);
            report.input_digest = digest(text);
            if (what == "family") {
                PointSetDocument doc = parse_point_set(text);
                FamilyRelation rel =
                    relation == "parallel"      ? FamilyRelation::Parallel
                    : relation == "staborcross" ? FamilyRelation::StabOrCross
                                                : FamilyRelation::Crossing;
                SolveResult r = max_pairwise_family(
                    doc.points, rel, SegmentFilter::All, -1, timeout_s);
                report.complete = r.complete;
                report.result_json =
                    "{\"size\":" + std::to_string(r.family.size()) +
                    ",\"upper_bound\":" + std::to_string(r.upper_bound) +
                    ",\"family\":" + serialize_family(r.family) + "}";
                return finish(report, timer,
                              r.complete ? kExitOk : kExitIncomplete);
            }
            if (what == "spoke") {
                PointSetDocument doc = parse_point_set(text);
                SpokeSetResult r = max_spoke_set(doc.points, cap, timeout_s);
                report.result_json =
                    "{\"size\":" + std::to_string(r.size) +
                    ",\"lines\":" + serialize_lines(r.witness) + "}";
                return finish(report, timer);
            }
            if (what == "parallel") {
                PointSetDocument doc = parse_point_set(text);
                ParallelSetResult r = max_parallel_set(doc.points, cap);
                report.result_json = "{\"size\":" + std::to_string(r.size) + "}";
                return finish(report, timer);
            }
            if (what == "focal") {
                PointSetDocument doc = parse_point_set(text);
                int r = max_focal_parallel_set(doc.points);
                report.result_json = "{\"size\":" + std::to_string(r) + "}";
                return finish(report, timer);
            }
            if (what == "side-compatible") {
                auto [stack, wires] = parse_barstack(text);
                SideCompatResult r =
                    max_side_compatible(stack, wires, ordered, timeout_s);
                report.complete = r.complete;
                report.result_json =
                    "{\"size\":" + std::to_string(r.size) +
                    ",\"upper_bound\":" + std::to_string(r.upper_bound) + "}";
                return finish(report, timer,
                              r.complete ? kExitOk : kExitIncomplete);
            }
            throw std::invalid_argument("unknown solve target " + what);
        }

        if (verify->parsed()) {
            report.command = "verify " + what;
            if (what == "construction") {
                DiskConstruction c = param_n == 24
                                         ? build_24_config(param_k, seed)
                                         : build_nover4(param_k, seed);
                report.certificates_ok = c.certificate.all_passed();
                report.result_json =
                    "{\"certificate\":" + cert_json(c.certificate) + "}";
                return finish(report, timer, report.certificates_ok
                                                 ? kExitOk
                                                 : kExitCertificate);
            }
            if (what == "family") {
                std::string text = slurp(in_path);
                report.input_digest = digest(text);
                PointSetDocument doc = parse_point_set(text);
                Family f = parse_family(slurp(aux_path));
                FamilyCheck check = verify_family(f, doc.points);
                report.certificates_ok = check.ok;
                report.result_json =
                    std::string("{\"valid\":") + (check.ok ? "true" : "false") +
                    "}";
                return finish(report, timer,
                              check.ok ? kExitOk : kExitCertificate);
            }
            throw std::invalid_argument("unknown verify target " + what);
        }

        if (table->parsed()) {
            report.command = "table";
            std::string text = slurp(in_path);
            report.input_digest = digest(text);
            PointSetDocument doc = parse_point_set(text);
            PermTable t = build_table(doc.points, partition_by_color(doc.points));
            std::string payload = serialize_table(t.rows);
            if (!out_path.empty()) spill(out_path, payload);
            std::string diag = "null";
            if (param_k > 1) {
                auto d = find_distinct_diagonal(t, param_k);
                diag = d ? "true" : "false";
            }
            report.result_json = "{\"rows\":" + std::to_string(t.rows.size()) +
                                 ",\"diagonal_found\":" + diag + "}";
            return finish(report, timer);
        }

        if (barstack->parsed()) {
            report.command = "barstack " + what;
            std::string text = slurp(in_path);
            report.input_digest = digest(text);
            if (what == "represent") {
                std::vector<Line> lines = parse_lines(text);
                BarStack b = bar_representation(lines);
                bool cyc = barstack_graph_has_simple_cycle(b);
                std::string payload = serialize_barstack(b, WireSequence{});
                if (!out_path.empty()) spill(out_path, payload);
                report.result_json = std::string("{\"simple_cycle\":") +
                                     (cyc ? "true" : "false") + "}";
                return finish(report, timer);
            }
            auto [stack, wires] = parse_barstack(text);
            if (what == "full-marbling") {
                FullMarbling fm = full_marbling_wires(stack);
                report.result_json = "{\"reference_level\":" +
                                     std::to_string(fm.reference_level) + "}";
                return finish(report, timer);
            }
            if (what == "ordered-half") {
                OrderedHalfResult r = ordered_half_subset(stack);
                report.result_json =
                    "{\"size\":" + std::to_string(r.pillars.size()) + "}";
                return finish(report, timer);
            }
            if (what == "max") {
                SideCompatResult r =
                    max_side_compatible(stack, wires, ordered, timeout_s);
                report.complete = r.complete;
                report.result_json = "{\"size\":" + std::to_string(r.size) + "}";
                return finish(report, timer,
                              r.complete ? kExitOk : kExitIncomplete);
            }
            throw std::invalid_argument("unknown barstack op " + what);
        }

        if (arrange->parsed()) {
            report.command = "arrange " + what;
            std::string text = slurp(in_path);
            report.input_digest = digest(text);
            std::vector<Line> lines = parse_lines(text);
            if (what == "cells") {
                ArrangementBase base(lines);
                std::vector<int> all(lines.size());
                for (std::size_t i = 0; i < lines.size(); ++i)
                    all[i] = static_cast<int>(i);
                CellComplex cc(base, all);
                report.result_json =
                    "{\"cells\":" + std::to_string(cc.cell_count()) +
                    ",\"unbounded\":" + std::to_string(cc.unbounded().size()) +
                    "}";
                return finish(report, timer);
            }
            if (what == "semialternating") {
                SemiMode m = mode == "msemialternating"
                                 ? SemiMode::MSemialternating
                             : mode == "mline" ? SemiMode::MLine
                                               : SemiMode::Semialternating;
                SemiSearchResult r = find_semialternating(
                    lines, m, m == SemiMode::MLine,
                    m == SemiMode::MLine ? 0 : -1, timeout_s);
                report.complete = r.complete;
                report.result_json =
                    std::string("{\"witness\":") +
                    (r.witness ? std::to_string(r.witness->size()) : "0") + "}";
                return finish(report, timer,
                              r.complete ? kExitOk : kExitIncomplete);
            }
            if (what == "spoke-path") {
                auto w = find_spoke_path(lines, param_n, timeout_s);
                report.result_json =
                    std::string("{\"found\":") + (w ? "true" : "false") + "}";
                return finish(report, timer);
            }
            throw std::invalid_argument("unknown arrange op " + what);
        }

        if (match->parsed()) {
            report.command = "match " + what;
            std::string text = slurp(in_path);
            report.input_digest = digest(text);
            PointSetDocument doc = parse_point_set(text);
            if (what == "non-crossing") {
                Matching m = non_crossing_bicolored_matching(
                    doc.points, partition_by_color(doc.points));
                std::string pairs = "[";
                for (std::size_t i = 0; i < m.pairs.size(); ++i)
                    pairs += (i ? "," : "") + std::string("[") +
                             std::to_string(m.pairs[i].first) + "," +
                             std::to_string(m.pairs[i].second) + "]";
                pairs += "]";
                report.result_json = "{\"pairs\":" + pairs + "}";
                if (!out_path.empty()) spill(out_path, pairs);
                return finish(report, timer);
            }
            if (what == "stabbing") {
                Family f = stabbing_family_general(doc.points);
                FamilyCheck check = verify_family(f, doc.points);
                report.certificates_ok = check.ok;
                report.result_json =
                    "{\"size\":" + std::to_string(f.size()) +
                    ",\"family\":" + serialize_family(f) + "}";
                if (!out_path.empty()) spill(out_path, serialize_family(f));
                return finish(report, timer,
                              check.ok ? kExitOk : kExitCertificate);
            }
            throw std::invalid_argument("unknown match op " + what);
        }

        if (render->parsed()) {
            report.command = "render";
            std::string text = slurp(in_path);
            report.input_digest = digest(text);
            std::string svg;
            if (text.find("\"points\"") != std::string::npos) {
                svg = render_svg_points(parse_point_set(text).points);
            } else if (text.find("\"lines\"") != std::string::npos) {
                svg = render_svg_lines(parse_lines(text));
            } else {
                auto [stack, wires] = parse_barstack(text);
                svg = render_svg_barstack(stack, wires);
            }
            spill(out_path, svg);
            report.result_json = "{\"bytes\":" + std::to_string(svg.size()) + "}";
            return finish(report, timer);
        }

        if (bench->parsed()) {
            report.command = "bench";
            ColoredPointSet ps;
            for (int i = 0; i < param_n; ++i) {
                Rat t(2 * i - param_n + 1, param_n + 1 + i);
                Rat c, s;
                rotation_from_half_angle(t, c, s);
                ps.points.emplace_back(c * 100, s * 100);
            }
            SolveResult r = max_pairwise_family(ps, FamilyRelation::Crossing,
                                                SegmentFilter::All, -1,
                                                timeout_s);
            report.complete = r.complete;
            report.result_json = "{\"n\":" + std::to_string(param_n) +
                                 ",\"size\":" + std::to_string(r.family.size()) +
                                 "}";
            return finish(report, timer);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCertificate;
    }
    return kExitInput;
}
