#include "crossfam/arrangements.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "crossfam/duality.hpp"

namespace crossfam {

ArrangementBase::ArrangementBase(std::vector<Line> lines)
    : lines_(std::move(lines)) {
    const int n = static_cast<int>(lines_.size());
    if (n > 62) throw std::invalid_argument("arrangement capped at 62 lines");
    for (const Line& l : lines_)
        if (l.vertical)
            throw std::invalid_argument("vertical lines not supported here");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lines_[i].a == lines_[j].a)
                throw std::invalid_argument("parallel lines in arrangement");

    std::vector<int> by_slope(n);
    std::iota(by_slope.begin(), by_slope.end(), 0);
    std::sort(by_slope.begin(), by_slope.end(),
              [&](int i, int j) { return lines_[i].a < lines_[j].a; });
    slope_rank_.resize(n);
    for (int r = 0; r < n; ++r) slope_rank_[by_slope[r]] = r;

    vert_rank_.assign(n, std::vector<int>(n, -1));
    for (int m = 0; m < n; ++m) {
        std::vector<int> others;
        for (int k = 0; k < n; ++k)
            if (k != m) others.push_back(k);
        std::sort(others.begin(), others.end(), [&](int u, int v) {
            return intersection_x(lines_[m], lines_[u]) <
                   intersection_x(lines_[m], lines_[v]);
        });
        for (std::size_t r = 0; r < others.size(); ++r)
            vert_rank_[m][others[r]] = static_cast<int>(r);
        for (std::size_t r = 0; r + 1 < others.size(); ++r)
            if (intersection_x(lines_[m], lines_[others[r]]) ==
                intersection_x(lines_[m], lines_[others[r + 1]]))
                throw std::invalid_argument("three concurrent lines");
    }

    vmask_.assign(n, std::vector<std::uint64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Point v = intersection_point(lines_[i], lines_[j]);
            std::uint64_t mask = 0;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                int s = lines_[k].side_of(v);
                if (s == 0)
                    throw std::invalid_argument("three concurrent lines");
                if (s > 0) mask |= (std::uint64_t{1} << k);
            }
            vmask_[i][j] = vmask_[j][i] = mask;
        }
}

Point ArrangementBase::vertex(int i, int j) const {
    return intersection_point(lines_[i], lines_[j]);
}

std::vector<int> ArrangementBase::lines_by_slope() const {
    std::vector<int> out(lines_.size());
    std::iota(out.begin(), out.end(), 0);
    std::sort(out.begin(), out.end(),
              [&](int i, int j) { return slope_rank_[i] < slope_rank_[j]; });
    return out;
}

CellComplex::CellComplex(const ArrangementBase& base, std::vector<int> members)
    : base_(base), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    const int k = static_cast<int>(members_.size());
    if (k == 0) throw std::invalid_argument("empty subarrangement");

    std::set<std::uint64_t> masks;
    // Cells around every vertex of the subarrangement.
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            std::uint64_t rest = 0;
            for (int w = 0; w < k; ++w) {
                if (w == u || w == v) continue;
                if (base_.vertex_above(members_[u], members_[v], members_[w]))
                    rest |= (std::uint64_t{1} << w);
            }
            for (int su = 0; su < 2; ++su)
                for (int sv = 0; sv < 2; ++sv) {
                    std::uint64_t m = rest;
                    if (su) m |= (std::uint64_t{1} << u);
                    if (sv) m |= (std::uint64_t{1} << v);
                    masks.insert(m);
                }
        }
    // Unbounded cells from the slope order: at x -> +inf the lines appear
    // bottom-to-top by ascending slope, at x -> -inf by descending slope.
    std::vector<int> pos_by_slope(k);
    std::iota(pos_by_slope.begin(), pos_by_slope.end(), 0);
    std::sort(pos_by_slope.begin(), pos_by_slope.end(), [&](int u, int v) {
        return base_.slope_less(members_[u], members_[v]);
    });
    std::set<std::uint64_t> unb;
    std::uint64_t acc = 0;
    unb.insert(acc);
    for (int g = 0; g < k; ++g) {
        acc |= (std::uint64_t{1} << pos_by_slope[g]);
        unb.insert(acc);
    }
    acc = 0;
    for (int g = k - 1; g >= 0; --g) {
        acc |= (std::uint64_t{1} << pos_by_slope[g]);
        unb.insert(acc);
    }
    masks.insert(unb.begin(), unb.end());

    cells_.assign(masks.begin(), masks.end());
    for (std::size_t c = 0; c < cells_.size(); ++c)
        id_[cells_[c]] = static_cast<int>(c);
    for (std::uint64_t m : unb) unbounded_.push_back(id_.at(m));
    adj_.resize(cells_.size());
    adj_done_.assign(cells_.size(), false);
}

int CellComplex::cell_id(std::uint64_t mask) const {
    auto it = id_.find(mask);
    return it == id_.end() ? -1 : it->second;
}

bool CellComplex::edge_nonempty(std::uint64_t mask, int m) const {
    const int k = static_cast<int>(members_.size());
    const int gm = members_[m];
    bool has_lo = false, has_hi = false;
    int lo = 0, hi = 0;
    for (int w = 0; w < k; ++w) {
        if (w == m) continue;
        const int gw = members_[w];
        bool above = (mask >> w) & 1;
        bool slope_gt = !base_.slope_less(gm, gw);  // slope(gm) > slope(gw)
        int r = base_.vertex_rank(gm, gw);
        // Above gw on line gm holds for x beyond the vertex when gm is the
        // steeper line, before it otherwise.
        bool lower_bound = (above == slope_gt);
        if (lower_bound) {
            if (!has_lo || r > lo) lo = r;
            has_lo = true;
        } else {
            if (!has_hi || r < hi) hi = r;
            has_hi = true;
        }
    }
    if (has_lo && has_hi) return lo < hi;
    return true;
}

const std::vector<std::pair<int, int>>& CellComplex::neighbors(int c) const {
    if (!adj_done_[c]) {
        const int k = static_cast<int>(members_.size());
        for (int m = 0; m < k; ++m) {
            std::uint64_t other = cells_[c] ^ (std::uint64_t{1} << m);
            auto it = id_.find(other);
            if (it == id_.end()) continue;
            // The shared edge lies on member m; both cells agree elsewhere.
            std::uint64_t common = cells_[c] & ~(std::uint64_t{1} << m);
            if (edge_nonempty(common, m)) adj_[c].push_back({it->second, m});
        }
        adj_done_[c] = true;
    }
    return adj_[c];
}

std::vector<int> level_sequence(const SemiWitness& w) {
    std::vector<int> out;
    for (std::size_t i = 0; i < w.cell_masks.size(); i += 2)
        out.push_back(__builtin_popcountll(w.cell_masks[i]));
    return out;
}

WitnessCheck validate_witness(const std::vector<Line>& lines,
                              const SemiWitness& w, SemiMode mode,
                              int required_start_level) {
    const int k = w.size();
    if (k == 0 || k % 2 != 0) return {false, "witness size must be even"};
    if (static_cast<int>(w.crossing_order.size()) != k)
        return {false, "crossing order size mismatch"};
    std::vector<int> pos(lines.size(), -1);
    for (int i = 0; i < k; ++i) pos[w.member_lines[i]] = i;
    std::vector<bool> crossed(k, false);
    std::uint64_t mask = w.start_above_mask;
    int prev_even_level = __builtin_popcountll(mask);
    if (required_start_level >= 0 && prev_even_level != required_start_level)
        return {false, "start level mismatch"};
    if (mode == SemiMode::SpokePath && prev_even_level != k / 2)
        return {false, "spoke path must start in a median cell"};

    int blues = 0, reds = 0;
    for (int g : w.member_lines) {
        if (lines[g].color == Color::Blue) ++blues;
        else if (lines[g].color == Color::Red) ++reds;
    }
    if ((mode == SemiMode::Semialternating ||
         mode == SemiMode::MSemialternating) &&
        blues != reds)
        return {false, "color counts differ"};

    for (int i = 0; i < k; i += 2) {
        int g1 = w.crossing_order[i];
        int g2 = w.crossing_order[i + 1];
        int p1 = pos[g1], p2 = pos[g2];
        if (p1 < 0 || p2 < 0) return {false, "crossing of a non-member line"};
        if (crossed[p1] || crossed[p2] || p1 == p2)
            return {false, "line crossed twice"};
        crossed[p1] = crossed[p2] = true;
        if (mode == SemiMode::Semialternating ||
            mode == SemiMode::MSemialternating) {
            Color c1 = lines[g1].color, c2 = lines[g2].color;
            bool bicolored = (c1 == Color::Blue && c2 == Color::Red) ||
                             (c1 == Color::Red && c2 == Color::Blue);
            if (!bicolored)
                return {false,
                        "pair " + std::to_string(i / 2) + " not bicolored"};
        }
        mask ^= (std::uint64_t{1} << p1);
        mask ^= (std::uint64_t{1} << p2);
        int lvl = __builtin_popcountll(mask);
        if (mode == SemiMode::MSemialternating && lvl < prev_even_level)
            return {false, "level sequence decreases"};
        if (mode == SemiMode::SpokePath && lvl != k / 2)
            return {false, "spoke path leaves the median level"};
        prev_even_level = lvl;
    }
    for (int i = 0; i < k; ++i)
        if (!crossed[i]) return {false, "member line never crossed"};
    return {};
}

namespace {

struct PseudoSearch {
    const CellComplex* cc;
    const std::vector<Line>* lines;
    SemiMode mode;
    int start_cell;
    std::uint64_t full_mask;
    std::vector<char> failed;  // state id -> known dead
    std::vector<int> path_cells;
    std::vector<int> path_members;

    // States: even = cell * 5; odd = cell * 5 + 1 + color_bit * 2 + dir_bit.
    int color_bit(int member_pos) const {
        return (*lines)[cc->members()[member_pos]].color == Color::Blue ? 1 : 0;
    }

    bool dfs_even(int c) {
        std::uint64_t crossed = cc->cell_mask(c) ^ cc->cell_mask(start_cell);
        if (crossed == full_mask) return true;
        int sid = c * 5;
        if (failed[sid]) return false;
        for (auto [c2, m] : cc->neighbors(c)) {
            if ((crossed >> m) & 1) continue;
            if (dfs_odd(c2, m)) {
                path_cells.push_back(c2);
                path_members.push_back(m);
                return true;
            }
        }
        failed[sid] = 1;
        return false;
    }

    bool dfs_odd(int c, int first_m) {
        bool dir_up = (cc->cell_mask(c) >> first_m) & 1;
        int cb = (mode == SemiMode::SpokePath) ? 0 : color_bit(first_m);
        int sid = c * 5 + 1 + cb * 2 + (dir_up ? 1 : 0);
        if (failed[sid]) return false;
        std::uint64_t crossed = cc->cell_mask(c) ^ cc->cell_mask(start_cell);
        int lvl = cc->level(c);
        int prev_even = lvl + (dir_up ? -1 : +1);
        for (auto [c2, m] : cc->neighbors(c)) {
            if ((crossed >> m) & 1) continue;
            if (mode == SemiMode::Semialternating ||
                mode == SemiMode::MSemialternating) {
                if (color_bit(m) == color_bit(first_m)) continue;
                // Pairs must be bicolored; None-colored lines never pair.
                Color col = (*lines)[cc->members()[m]].color;
                Color col1 = (*lines)[cc->members()[first_m]].color;
                if (col == Color::None || col1 == Color::None) continue;
            }
            int lvl2 = cc->level(c2);
            if (mode == SemiMode::MSemialternating && lvl2 < prev_even)
                continue;
            if (mode == SemiMode::SpokePath && lvl2 != prev_even) continue;
            if (dfs_even(c2)) {
                path_cells.push_back(c2);
                path_members.push_back(m);
                return true;
            }
        }
        failed[sid] = 1;
        return false;
    }
};

}  // namespace

std::optional<SemiWitness> search_pseudoline(const ArrangementBase& base,
                                             const std::vector<int>& members,
                                             SemiMode mode,
                                             int required_start_level) {
    const int k = static_cast<int>(members.size());
    if (k == 0 || k % 2 != 0) return std::nullopt;
    CellComplex cc(base, members);
    const std::uint64_t full =
        (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);

    std::vector<int> starts;
    if (mode == SemiMode::SpokePath) {
        for (int c = 0; c < cc.cell_count(); ++c)
            if (cc.level(c) == k / 2) starts.push_back(c);
    } else {
        starts = cc.unbounded();
        std::sort(starts.begin(), starts.end());
    }

    for (int s : starts) {
        if (required_start_level >= 0 && cc.level(s) != required_start_level)
            continue;
        if (cc.cell_id(cc.cell_mask(s) ^ full) < 0) continue;
        PseudoSearch search;
        search.cc = &cc;
        search.lines = &base.lines();
        search.mode = mode;
        search.start_cell = s;
        search.full_mask = full;
        search.failed.assign(cc.cell_count() * 5, 0);
        if (!search.dfs_even(s)) continue;

        SemiWitness w;
        w.member_lines = cc.members();
        std::reverse(search.path_cells.begin(), search.path_cells.end());
        std::reverse(search.path_members.begin(), search.path_members.end());
        w.cell_masks.push_back(cc.cell_mask(s));
        for (int c : search.path_cells) w.cell_masks.push_back(cc.cell_mask(c));
        for (int m : search.path_members)
            w.crossing_order.push_back(cc.members()[m]);
        w.start_above_mask = cc.cell_mask(s);
        w.start_sample = sample_point_in_cell(base, cc.members(),
                                              cc.cell_mask(s));
        return w;
    }
    return std::nullopt;
}

Point sample_point_in_cell(const ArrangementBase& base,
                           const std::vector<int>& members,
                           std::uint64_t mask) {
    const int k = static_cast<int>(members.size());
    auto matches = [&](const Point& p) {
        for (int w = 0; w < k; ++w) {
            int s = base.lines()[members[w]].side_of(p);
            if (s == 0) return false;
            if ((s > 0) != (((mask >> w) & 1) != 0)) return false;
        }
        return true;
    };
    if (k == 1) {
        const Line& l = base.lines()[members[0]];
        Point p(Rat(0), l.b + ((mask & 1) ? 1 : -1));
        if (matches(p)) return p;
    }
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            const Line& lu = base.lines()[members[u]];
            const Line& lv = base.lines()[members[v]];
            std::uint64_t rest = 0;
            for (int w = 0; w < k; ++w) {
                if (w == u || w == v) continue;
                if (base.vertex_above(members[u], members[v], members[w]))
                    rest |= (std::uint64_t{1} << w);
            }
            if ((mask & ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v))) !=
                rest)
                continue;
            // Move along the other line's direction: exact control of the two
            // quadrant signs, then shrink until every other sign matches.
            Point vert = base.vertex(members[u], members[v]);
            int su = ((mask >> u) & 1) ? 1 : -1;
            int sv = ((mask >> v) & 1) ? 1 : -1;
            // d_v = (1, a_v) changes side of lu at rate a_v - a_u.
            int rate_uv = sign(lv.a - lu.a);
            Rat tu = Rat(su * rate_uv);  // direction multiplier along d_v
            Rat tv = Rat(-sv * rate_uv); // d_u changes side of lv at a_u - a_v
            for (int shrink = 0; shrink < 128; ++shrink) {
                Rat step(1, 1);
                for (int i = 0; i < shrink; ++i) step /= 4;
                Point p(vert.x + step * (tu + tv),
                        vert.y + step * (tu * lv.a + tv * lu.a));
                if (matches(p)) return p;
            }
        }
    throw std::logic_error("sample_point_in_cell: no realization found");
}

namespace {

// Longest M-semialternating subset along a straight line's crossing sequence.
// Crossings are (color, upward) in order; a chosen pair may not be two
// downward crossings, and with level_zero every chosen crossing must be
// upward.
int best_line_pairs(const std::vector<std::pair<Color, bool>>& seq,
                    bool level_zero) {
    int no_pending = 0;
    // pending states: color (B/R) x dir (up/down) -> best count
    int pend[2][2] = {{-1, -1}, {-1, -1}};
    for (const auto& [col, up] : seq) {
        if (col == Color::None) continue;
        if (level_zero && !up) continue;
        int cb = (col == Color::Blue) ? 1 : 0;
        int db = up ? 1 : 0;
        int best_close = -1;
        int ob = 1 - cb;
        for (int d = 0; d < 2; ++d) {
            if (pend[ob][d] < 0) continue;
            if (d == 0 && db == 0) continue;  // both downward
            best_close = std::max(best_close, pend[ob][d] + 2);
        }
        int open_from = no_pending;
        if (best_close >= 0) no_pending = std::max(no_pending, best_close);
        pend[cb][db] = std::max(pend[cb][db], open_from);
    }
    return no_pending;
}

std::vector<Point> arrangement_vertices(const std::vector<Line>& lines) {
    std::vector<Point> verts;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            bool par = lines[i].vertical
                           ? lines[j].vertical
                           : (!lines[j].vertical && lines[i].a == lines[j].a);
            if (!par) verts.push_back(intersection_point(lines[i], lines[j]));
        }
    return verts;
}

}  // namespace

SemiSearchResult find_semialternating(const std::vector<Line>& lines,
                                      SemiMode mode, bool subarrangement_search,
                                      int required_start_level,
                                      double timeout_seconds) {
    SemiSearchResult out;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(timeout_seconds));

    if (mode == SemiMode::MLine) {
        // Straight-line witnesses through perturbed vertex pairs; each
        // candidate is scanned for its best pairing.
        if (required_start_level != 0)
            throw std::invalid_argument(
                "MLine search supports start level 0 only");
        std::vector<Point> verts = arrangement_vertices(lines);
        int best = 0;
        auto consider = [&](const Line& cand) {
            for (const Line& l : lines) {
                if (l.vertical || cand.vertical) continue;
                if (l.a == cand.a) return;
            }
            std::vector<std::pair<Rat, int>> hits;
            for (std::size_t i = 0; i < lines.size(); ++i)
                hits.push_back(
                    {intersection_x(cand, lines[i]), static_cast<int>(i)});
            std::sort(hits.begin(), hits.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (std::size_t i = 0; i + 1 < hits.size(); ++i)
                if (hits[i].first == hits[i + 1].first) return;
            for (int orient = 0; orient < 2; ++orient) {
                std::vector<std::pair<Color, bool>> seq;
                for (std::size_t i = 0; i < hits.size(); ++i) {
                    int li = orient == 0 ? hits[i].second
                                         : hits[hits.size() - 1 - i].second;
                    bool up = orient == 0 ? (cand.a > lines[li].a)
                                          : (cand.a < lines[li].a);
                    seq.push_back({lines[li].color, up});
                }
                best = std::max(best, best_line_pairs(seq, true));
            }
        };
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (std::chrono::steady_clock::now() >= deadline) {
                out.complete = false;
                break;
            }
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                const Point& p = verts[i];
                const Point& q = verts[j];
                if (p.x == q.x) continue;
                for (int du = -1; du <= 1; du += 2)
                    for (int dv = -1; dv <= 1; dv += 2)
                        for (int shrink = 8; shrink <= 32; shrink += 12) {
                            Rat eps(1, std::int64_t{1} << shrink);
                            Point pp(p.x, p.y + du * eps);
                            Point qq(q.x, q.y + dv * eps);
                            consider(Line::through(pp, qq));
                        }
            }
        }
        // Encode the best size in a trivial witness-line marker.
        if (best > 0) {
            out.witness = SemiWitness{};
            out.witness->member_lines.resize(best);
        }
        return out;
    }

    ArrangementBase base(lines);
    std::vector<int> blues, reds, all;
    for (int i = 0; i < base.size(); ++i) {
        all.push_back(i);
        if (lines[i].color == Color::Blue) blues.push_back(i);
        else if (lines[i].color == Color::Red) reds.push_back(i);
    }

    if (!subarrangement_search) {
        if (mode != SemiMode::SpokePath && blues.size() != reds.size())
            throw std::invalid_argument(
                "semialternating search needs equal color counts");
        out.witness = search_pseudoline(base, all, mode, required_start_level);
        return out;
    }

    auto each_combo = [](int n, int k, auto&& fn) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        if (k == 0) {
            fn(comb);
            return;
        }
        while (true) {
            fn(comb);
            int i = k - 1;
            while (i >= 0 && comb[i] == n - k + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    };

    const int maxj =
        static_cast<int>(std::min(blues.size(), reds.size()));
    for (int j = maxj; j >= 1; --j) {
        std::optional<SemiWitness> found;
        each_combo(static_cast<int>(blues.size()), j, [&](const std::vector<int>& cb) {
            if (found || std::chrono::steady_clock::now() >= deadline) return;
            each_combo(static_cast<int>(reds.size()), j,
                       [&](const std::vector<int>& cr) {
                if (found || std::chrono::steady_clock::now() >= deadline)
                    return;
                std::vector<int> members;
                for (int u : cb) members.push_back(blues[u]);
                for (int u : cr) members.push_back(reds[u]);
                std::sort(members.begin(), members.end());
                found = search_pseudoline(base, members, mode,
                                          required_start_level);
            });
        });
        if (std::chrono::steady_clock::now() >= deadline) {
            out.complete = false;
            return out;
        }
        if (found) {
            out.witness = found;
            return out;
        }
    }
    return out;
}

std::optional<SemiWitness> find_spoke_path(const std::vector<Line>& lines,
                                           int target,
                                           double timeout_seconds) {
    if (target < 2 || target % 2 != 0)
        throw std::invalid_argument("spoke path size must be even and >= 2");
    ArrangementBase base(lines);
    const int n = base.size();
    if (target > n) return std::nullopt;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(timeout_seconds));

    std::vector<int> comb(target);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        if (std::chrono::steady_clock::now() >= deadline)
            throw std::runtime_error("find_spoke_path: timeout");
        auto w = search_pseudoline(base, comb, SemiMode::SpokePath, -1);
        if (w) return w;
        int i = target - 1;
        while (i >= 0 && comb[i] == n - target + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < target; ++j) comb[j] = comb[j - 1] + 1;
    }
    return std::nullopt;
}

namespace {

// Direction comparator for exact angular order over (dx, dy) != 0.
int dir_half(const Rat& dx, const Rat& dy) {
    // 0: angle in [0, pi), 1: in [pi, 2pi). x-axis positive belongs to 0.
    int sy = sign(dy);
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    return sign(dx) > 0 ? 0 : 1;
}

bool dir_less(const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
    int ha = dir_half(a.first, a.second);
    int hb = dir_half(b.first, b.second);
    if (ha != hb) return ha < hb;
    return sign(cross(a.first, a.second, b.first, b.second)) > 0;
}

}  // namespace

bool is_spoke_set(const std::vector<Line>& lines, const ColoredPointSet& ps) {
    const int k = static_cast<int>(lines.size());
    if (k == 0) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool par = lines[i].vertical
                           ? lines[j].vertical
                           : (!lines[j].vertical && lines[i].a == lines[j].a);
            if (par) return false;  // spoke sets are pairwise non-parallel
        }
    std::vector<std::pair<Rat, Rat>> dirs;
    for (const Line& l : lines) {
        Rat dx = l.vertical ? Rat(0) : Rat(1);
        Rat dy = l.vertical ? Rat(1) : l.a;
        dirs.push_back({dx, dy});
        dirs.push_back({-dx, -dy});
    }
    std::sort(dirs.begin(), dirs.end(), dir_less);
    for (int g = 0; g < 2 * k; ++g) {
        const auto& d1 = dirs[g];
        const auto& d2 = dirs[(g + 1) % (2 * k)];
        Rat mx = d1.first + d2.first;
        Rat my = d1.second + d2.second;
        // Representative direction of the open arc; the wrap-around arc of a
        // single line is handled with the two normals.
        if (sign(mx) == 0 && sign(my) == 0) {
            mx = -d1.second;
            my = d1.first;
        }
        bool populated = false;
        for (const Point& p : ps.points) {
            bool all_match = true;
            for (const Line& l : lines) {
                int at_inf = l.vertical ? sign(mx)
                                        : sign(my - l.a * mx);
                int side = l.side_of(p);
                if (at_inf == 0 || side != at_inf) {
                    all_match = false;
                    break;
                }
            }
            if (all_match) {
                populated = true;
                break;
            }
        }
        if (!populated) return false;
    }
    return true;
}

ColoredPointSet ensure_distinct_x(const ColoredPointSet& ps) {
    ColoredPointSet cur = ps;
    for (long k = 0; k <= 128; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < cur.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cur.size() && ok; ++j)
                if (cur[i].x == cur[j].x) ok = false;
        if (ok) return cur;
        Rat t(1, 1009 + 16 * k);
        Rat c, s;
        rotation_from_half_angle(t, c, s);
        cur = rotate_set(ps, c, s);
    }
    throw std::runtime_error("ensure_distinct_x: rotation search failed");
}

SpokeSetResult max_spoke_set(const ColoredPointSet& ps, int cap,
                             double timeout_seconds) {
    const int n = static_cast<int>(ps.size());
    if (n > cap)
        throw std::invalid_argument("max_spoke_set: instance exceeds cap");
    SpokeSetResult best;
    if (n < 2) return best;
    ColoredPointSet pts = ensure_distinct_x(ps);
    std::vector<Line> duals = dual_lines(pts);
    ArrangementBase base(duals);

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(timeout_seconds));

    for (int k = n / 2; k >= 1; --k) {
        const int target = 2 * k;
        std::vector<int> comb(target);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            if (std::chrono::steady_clock::now() >= deadline)
                throw std::runtime_error("max_spoke_set: timeout");
            auto w = search_pseudoline(base, comb, SemiMode::SpokePath, -1);
            if (w) {
                // Recover spoke lines from sample points of k even cells;
                // both end-windows are tried and verified against the
                // definition directly.
                for (int skip_first = 1; skip_first >= 0; --skip_first) {
                    std::vector<Line> spokes;
                    bool ok = true;
                    for (int i = 0; i < k; ++i) {
                        std::uint64_t mask =
                            w->cell_masks[2 * (i + skip_first)];
                        Point q = sample_point_in_cell(base, w->member_lines,
                                                       mask);
                        Line sp = point_to_dual_line(q);
                        for (const Line& prev : spokes)
                            if (prev.a == sp.a) ok = false;
                        if (!ok) break;
                        spokes.push_back(sp);
                    }
                    if (ok && is_spoke_set(spokes, ps)) {
                        best.size = k;
                        best.witness = spokes;
                        best.path = *w;
                        return best;
                    }
                }
            }
            int i = target - 1;
            while (i >= 0 && comb[i] == n - target + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < target; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return best;
}

namespace {

// Candidate above-sets achievable by straight lines: upper sides of perturbed
// point-pair lines, plus the empty and full sets.
struct AboveSetCatalog {
    std::vector<std::uint32_t> masks;
    // For recovery: the pair and inclusion variant behind each mask.
    struct Origin {
        int i = -1, j = -1;
        std::uint32_t mask = 0;
    };
    std::vector<Origin> origins;
};

AboveSetCatalog above_set_catalog(const ColoredPointSet& ps) {
    const int n = static_cast<int>(ps.size());
    if (n > 31) throw std::invalid_argument("above-set catalog capped at 31 points");
    AboveSetCatalog cat;
    std::set<std::uint32_t> seen;
    auto add = [&](std::uint32_t m, int i, int j) {
        if (seen.insert(m).second) {
            cat.masks.push_back(m);
            cat.origins.push_back({i, j, m});
        }
    };
    add(0, -1, -1);
    add((n >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1), -1, -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<std::uint32_t> bases;
            if (ps[i].x == ps[j].x) {
                std::uint32_t left = 0, right = 0;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (ps[k].x < ps[i].x) left |= (std::uint32_t{1} << k);
                    else if (ps[k].x > ps[i].x) right |= (std::uint32_t{1} << k);
                }
                bases = {left, right};
            } else {
                Line l = Line::through(ps[i], ps[j]);
                std::uint32_t up = 0;
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (l.side_of(ps[k]) > 0) up |= (std::uint32_t{1} << k);
                }
                bases = {up};
            }
            for (std::uint32_t base : bases)
                for (int ti = 0; ti < 2; ++ti)
                    for (int tj = 0; tj < 2; ++tj) {
                        std::uint32_t m = base;
                        if (ti) m |= (std::uint32_t{1} << i);
                        if (tj) m |= (std::uint32_t{1} << j);
                        add(m, i, j);
                    }
        }
    return cat;
}

// A straight line whose strictly-above set is exactly `target`.
Line line_with_above_set(const ColoredPointSet& ps, std::uint32_t target) {
    const int n = static_cast<int>(ps.size());
    auto achieves = [&](const Line& l) {
        if (l.vertical) return false;
        for (int k = 0; k < n; ++k) {
            int s = l.side_of(ps[k]);
            if (s == 0) return false;
            if ((s > 0) != (((target >> k) & 1) != 0)) return false;
        }
        return true;
    };
    Rat ymin = ps[0].y, ymax = ps[0].y;
    Rat xmin = ps[0].x, xmax = ps[0].x;
    for (const Point& p : ps.points) {
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
    }
    if (target == 0) return Line::slope_intercept(Rat(0), ymax + 1);
    {
        std::uint32_t full =
            (n >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
        if (target == full) return Line::slope_intercept(Rat(0), ymin - 1);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            for (int shrink = 4; shrink <= 120; shrink += 8) {
                Rat eps(1, std::int64_t{1} << shrink);
                Rat span = (xmax - xmin + ymax - ymin + 1);
                Rat d = eps / span;
                for (int si = -1; si <= 1; ++si)
                    for (int sj = -1; sj <= 1; ++sj) {
                        if (si == 0 && sj == 0) continue;
                        Point pi(ps[i].x, ps[i].y + si * d);
                        Point pj(ps[j].x, ps[j].y + sj * d);
                        if (pi.x == pj.x) continue;
                        Line cand = Line::through(pi, pj);
                        if (achieves(cand)) return cand;
                    }
            }
        }
    throw std::logic_error("line_with_above_set: no line realizes the set");
}

}  // namespace

ParallelSetResult max_parallel_set(const ColoredPointSet& ps, int cap) {
    const int n = static_cast<int>(ps.size());
    if (n > cap)
        throw std::invalid_argument("max_parallel_set: instance exceeds cap");
    std::vector<int> blues = ps.indices_of(Color::Blue);
    std::vector<int> reds = ps.indices_of(Color::Red);
    ParallelSetResult best;
    if (blues.empty() || reds.empty()) return best;

    AboveSetCatalog cat = above_set_catalog(ps);
    const int kmax = static_cast<int>(std::min(blues.size(), reds.size()));

    auto each_combo = [](int m, int k, auto&& fn) {
        std::vector<int> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            if (fn(comb)) return true;
            int i = k - 1;
            while (i >= 0 && comb[i] == m - k + i) --i;
            if (i < 0) return false;
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    };

    for (int k = kmax; k >= 1; --k) {
        bool found = false;
        each_combo(static_cast<int>(blues.size()), k, [&](const std::vector<int>& cb) {
            std::uint32_t bmask = 0;
            for (int u : cb) bmask |= (std::uint32_t{1} << blues[u]);
            each_combo(static_cast<int>(reds.size()), k,
                       [&](const std::vector<int>& cr) {
                std::uint32_t rmask = 0;
                for (int u : cr) rmask |= (std::uint32_t{1} << reds[u]);
                std::uint32_t x = bmask | rmask;
                // Achievable balanced traces by level.
                std::vector<std::vector<std::uint32_t>> traces(k + 1);
                std::vector<std::vector<std::uint32_t>> trace_mask(k + 1);
                for (std::uint32_t m : cat.masks) {
                    std::uint32_t t = m & x;
                    int nb = __builtin_popcount(t & bmask);
                    int nr = __builtin_popcount(t & rmask);
                    if (nb != nr || nb > k) continue;
                    bool dup = false;
                    for (std::uint32_t prev : traces[nb])
                        if (prev == t) {
                            dup = true;
                            break;
                        }
                    if (!dup) {
                        traces[nb].push_back(t);
                        trace_mask[nb].push_back(m);
                    }
                }
                // Nested chain from the empty trace to x.
                std::vector<std::vector<int>> pred(k + 1);
                std::vector<std::vector<char>> alive(k + 1);
                for (int j = 0; j <= k; ++j) {
                    pred[j].assign(traces[j].size(), -1);
                    alive[j].assign(traces[j].size(), 0);
                }
                for (std::size_t t0 = 0; t0 < traces[0].size(); ++t0)
                    if (traces[0][t0] == 0) alive[0][t0] = 1;
                for (int j = 0; j < k; ++j)
                    for (std::size_t a = 0; a < traces[j].size(); ++a) {
                        if (!alive[j][a]) continue;
                        for (std::size_t b = 0; b < traces[j + 1].size(); ++b) {
                            if (alive[j + 1][b]) continue;
                            if ((traces[j][a] & ~traces[j + 1][b]) == 0) {
                                alive[j + 1][b] = 1;
                                pred[j + 1][b] = static_cast<int>(a);
                            }
                        }
                    }
                int final_idx = -1;
                for (std::size_t b = 0; b < traces[k].size(); ++b)
                    if (alive[k][b] && traces[k][b] == x)
                        final_idx = static_cast<int>(b);
                if (final_idx < 0) return false;

                // Recover the chain of witness masks and the step pairs.
                std::vector<std::uint32_t> chain(k + 1);
                int cur = final_idx;
                for (int j = k; j >= 0; --j) {
                    chain[j] = trace_mask[j][cur];
                    if (j > 0) cur = pred[j][cur];
                }
                best.size = k;
                best.blues.clear();
                best.reds.clear();
                best.witness_lines.clear();
                for (int j = 0; j <= k; ++j)
                    best.witness_lines.push_back(
                        line_with_above_set(ps, chain[j]));
                for (int j = 1; j <= k; ++j) {
                    std::uint32_t gained =
                        (chain[j] & x) & ~(chain[j - 1] & x);
                    for (int p = 0; p < n; ++p)
                        if ((gained >> p) & 1) {
                            if (ps[p].color == Color::Blue)
                                best.blues.push_back(p);
                            else
                                best.reds.push_back(p);
                        }
                }
                found = true;
                return true;
            });
            return found;
        });
        if (found) return best;
    }
    return best;
}

int max_focal_parallel_set(const ColoredPointSet& ps) {
    ColoredPointSet pts = ensure_distinct_x(ps);
    std::vector<Line> duals = dual_lines(pts);
    SemiSearchResult r =
        find_semialternating(duals, SemiMode::MLine, true, 0, 600.0);
    return r.witness ? r.witness->size() / 2 : 0;
}

namespace {

SemiWitness restrict_witness(const SemiWitness& w,
                             const std::vector<int>& keep_lines) {
    SemiWitness out;
    out.member_lines = keep_lines;
    std::sort(out.member_lines.begin(), out.member_lines.end());
    auto pos_of = [&](int g) {
        auto it = std::lower_bound(out.member_lines.begin(),
                                   out.member_lines.end(), g);
        return (it != out.member_lines.end() && *it == g)
                   ? static_cast<int>(it - out.member_lines.begin())
                   : -1;
    };
    // Start mask restricted to the kept lines.
    std::uint64_t start = 0;
    for (std::size_t i = 0; i < w.member_lines.size(); ++i) {
        int p = pos_of(w.member_lines[i]);
        if (p >= 0 && ((w.start_above_mask >> i) & 1))
            start |= (std::uint64_t{1} << p);
    }
    out.start_above_mask = start;
    out.start_sample = w.start_sample;
    std::uint64_t mask = start;
    out.cell_masks.push_back(mask);
    for (int g : w.crossing_order) {
        int p = pos_of(g);
        if (p < 0) continue;
        out.crossing_order.push_back(g);
        mask ^= (std::uint64_t{1} << p);
        out.cell_masks.push_back(mask);
    }
    return out;
}

}  // namespace

DecomposeResult decompose_ssORps(const std::vector<Line>& lines,
                                 const SemiWitness& witness) {
    WitnessCheck chk =
        validate_witness(lines, witness, SemiMode::MSemialternating);
    if (!chk.ok)
        throw std::invalid_argument("decompose_ssORps: input not valid: " +
                                    chk.reason);
    std::vector<int> parallel_lines, spoke_lines;
    std::vector<int> lvl = level_sequence(witness);
    for (std::size_t t = 0; t + 1 < lvl.size(); ++t) {
        int g1 = witness.crossing_order[2 * t];
        int g2 = witness.crossing_order[2 * t + 1];
        if (lvl[t + 1] - lvl[t] == 2) {
            parallel_lines.push_back(g1);
            parallel_lines.push_back(g2);
        } else {
            spoke_lines.push_back(g1);
            spoke_lines.push_back(g2);
        }
    }
    DecomposeResult out;
    out.parallel_part = restrict_witness(witness, parallel_lines);
    out.spoke_part = restrict_witness(witness, spoke_lines);
    return out;
}

SemiWitness semi_to_M(const std::vector<Line>& lines,
                      const SemiWitness& witness) {
    WitnessCheck chk =
        validate_witness(lines, witness, SemiMode::Semialternating);
    if (!chk.ok)
        throw std::invalid_argument("semi_to_M: input not valid: " + chk.reason);
    std::vector<int> keep;
    std::vector<int> lvl = level_sequence(witness);
    for (std::size_t t = 0; t + 1 < lvl.size(); ++t) {
        int g1 = witness.crossing_order[2 * t];
        int g2 = witness.crossing_order[2 * t + 1];
        if (lvl[t + 1] - lvl[t] != -2) {
            keep.push_back(g1);
            keep.push_back(g2);
        }
    }
    SemiWitness out = restrict_witness(witness, keep);
    WitnessCheck post = validate_witness(lines, out, SemiMode::MSemialternating);
    if (!post.ok)
        throw std::logic_error("semi_to_M: reduction not monotone: " +
                               post.reason);
    return out;
}

std::optional<RotationStep> rotate_step_decrease(
    const std::vector<Line>& lines, const SemiWitness& witness) {
    if (!witness.start_sample)
        throw std::invalid_argument("rotate_step_decrease needs a start sample");
    const Point& o = *witness.start_sample;
    if (__builtin_popcountll(witness.start_above_mask) == 0) return std::nullopt;

    // First line to flip under clockwise rotation has the smallest slope
    // among members; counterclockwise, the largest.
    int min_m = -1, max_m = -1;
    for (int g : witness.member_lines) {
        if (min_m < 0 || lines[g].a < lines[min_m].a) min_m = g;
        if (max_m < 0 || lines[g].a > lines[max_m].a) max_m = g;
    }
    auto below_o = [&](int g) { return lines[g].side_of(o) > 0; };

    for (int attempt = 0; attempt < 2; ++attempt) {
        bool clockwise = attempt == 0;
        int flip = clockwise ? min_m : max_m;
        if (!below_o(flip)) continue;
        // Rotation angle strictly between this flip and the next one.
        double a1 = std::atan(rat_to_double(lines[flip].a));
        double gap = clockwise ? (a1 + M_PI / 2) : (M_PI / 2 - a1);
        double second = M_PI;  // next flip angle
        for (int g : witness.member_lines) {
            if (g == flip) continue;
            double ag = std::atan(rat_to_double(lines[g].a));
            double fg = clockwise ? (ag + M_PI / 2) : (M_PI / 2 - ag);
            second = std::min(second, fg);
        }
        double target = (gap + std::min(second, gap + 0.5)) / 2;
        double signed_angle = clockwise ? -target : target;
        for (long denom = 1 << 16; denom < (1L << 40); denom <<= 4) {
            Rat t(static_cast<long>(std::llround(std::tan(signed_angle / 2) *
                                                 denom)),
                  denom);
            Rat c, s;
            rotation_from_half_angle(t, c, s);
            std::vector<Line> rl;
            bool ok = true;
            for (const Line& l : lines) {
                Point p0(Rat(0), l.b), p1(Rat(1), l.a + l.b);
                Point q0 = rotate_point(p0, c, s), q1 = rotate_point(p1, c, s);
                if (q0.x == q1.x) {
                    ok = false;
                    break;
                }
                rl.push_back(Line::through(q0, q1, l.color));
            }
            if (!ok) continue;
            Point ro = rotate_point(o, c, s);
            // Exactly the flip line must have left the below set.
            for (int g : witness.member_lines) {
                bool before = below_o(g);
                bool after = rl[g].side_of(ro) > 0;
                if (g == flip ? (before == after) : (before != after)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            RotationStep out;
            out.lines = rl;
            out.witness = witness;
            out.witness.start_sample = ro;
            // Recompute the start mask and the cell masks along the path.
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < witness.member_lines.size(); ++i)
                if (rl[witness.member_lines[i]].side_of(ro) > 0)
                    mask |= (std::uint64_t{1} << i);
            out.witness.start_above_mask = mask;
            out.witness.cell_masks.assign(1, mask);
            for (int g : witness.crossing_order) {
                auto it = std::lower_bound(witness.member_lines.begin(),
                                           witness.member_lines.end(), g);
                int p = static_cast<int>(it - witness.member_lines.begin());
                mask ^= (std::uint64_t{1} << p);
                out.witness.cell_masks.push_back(mask);
            }
            return out;
        }
    }
    return std::nullopt;
}

WheelResult largest_wheel(const ColoredPointSet& ps, bool alternating,
                          std::vector<Point> candidate_centers) {
    const int n = static_cast<int>(ps.size());
    WheelResult best;
    if (n == 0) return best;
    if (candidate_centers.empty()) {
        // Sample a point in every cell of the point-pair line arrangement.
        std::vector<Line> pls;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pls.push_back(Line::through(ps[i], ps[j]));
        auto on_some_line = [&](const Point& q) {
            for (const Line& l : pls)
                if (l.side_of(q) == 0) return true;
            return false;
        };
        for (std::size_t i = 0; i < pls.size(); ++i)
            for (std::size_t j = i + 1; j < pls.size(); ++j) {
                bool par = pls[i].vertical
                               ? pls[j].vertical
                               : (!pls[j].vertical && pls[i].a == pls[j].a);
                if (par) continue;
                Point v = intersection_point(pls[i], pls[j]);
                for (int du = -1; du <= 1; du += 2)
                    for (int dv = -1; dv <= 1; dv += 2) {
                        for (int shrink = 2; shrink < 100; shrink += 2) {
                            Rat eps(1, std::int64_t{1} << shrink);
                            Point q(v.x + du * eps, v.y + dv * eps * eps * 3);
                            if (!on_some_line(q)) {
                                candidate_centers.push_back(q);
                                break;
                            }
                        }
                    }
            }
        if (candidate_centers.empty()) candidate_centers.push_back(Point(0, 0));
    }

    for (const Point& q : candidate_centers) {
        // Rotating a vertical line through q clockwise hits points in
        // descending slope order of (p - q), mirrored to positive x.
        std::vector<int> order;
        std::vector<int> side(n, 0);
        for (int i = 0; i < n; ++i) {
            if (ps[i] == q) continue;
            side[i] = sign(ps[i].x - q.x);
            order.push_back(i);
        }
        std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
            Rat dxi = ps[i].x - q.x, dyi = ps[i].y - q.y;
            Rat dxj = ps[j].x - q.x, dyj = ps[j].y - q.y;
            bool vi = sign(dxi) == 0, vj = sign(dxj) == 0;
            if (vi != vj) return vi;
            if (vi && vj) return i < j;
            if (sign(dxi) < 0) {
                dxi = -dxi;
                dyi = -dyi;
            }
            if (sign(dxj) < 0) {
                dxj = -dxj;
                dyj = -dyj;
            }
            int cmp = compare_slopes(dxi, dyi, dxj, dyj);
            if (cmp != 0) return cmp > 0;  // descending slope
            return i < j;
        });

        // Longest subsequence with alternating sides (and colors when asked).
        std::vector<std::array<int, 3>> choices;  // (idx, side, color)
        for (int idx : order) {
            if (side[idx] == 0) continue;
            Color c = ps[idx].color;
            if (alternating && c == Color::None) continue;
            int sb = side[idx] > 0 ? 1 : 0;
            int cb = c == Color::Blue ? 1 : 0;
            choices.push_back({idx, sb, cb});
        }
        const int m = static_cast<int>(choices.size());
        // dp over positions, storing predecessors for witness recovery.
        std::vector<int> len(m, 1), prev(m, -1);
        int glob = -1;
        for (int u = 0; u < m; ++u) {
            for (int v = 0; v < u; ++v) {
                bool ok = choices[v][1] != choices[u][1];
                if (alternating) ok = ok && choices[v][2] != choices[u][2];
                if (ok && len[v] + 1 > len[u]) {
                    len[u] = len[v] + 1;
                    prev[u] = v;
                }
            }
            if (glob < 0 || len[u] > len[glob]) glob = u;
        }
        int sz = glob >= 0 ? len[glob] : 0;
        if (sz > best.size) {
            best.size = sz;
            best.center = q;
            best.order.clear();
            for (int u = glob; u >= 0; u = prev[u])
                best.order.push_back(choices[u][0]);
            std::reverse(best.order.begin(), best.order.end());
        }
    }
    return best;
}

}  // namespace crossfam
