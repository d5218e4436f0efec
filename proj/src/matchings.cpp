#include "crossfam/matchings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "crossfam/duality.hpp"

namespace crossfam {

Matching non_crossing_bicolored_matching(const ColoredPointSet& ps,
                                         const Partition2& partition) {
    if (!is_one_avoiding(ps, partition))
        throw std::invalid_argument("matching requires a 1-avoiding input");
    if (partition.set_a.size() != partition.set_b.size())
        throw std::invalid_argument("matching requires equal side sizes");

    // Normalized frame: red (set_b) strictly left of blue (set_a).
    ColoredPointSet q =
        rotate_vertical_separation(ps, partition.set_a, partition.set_b);
    std::vector<int> blues = partition.set_a;
    std::vector<int> reds = partition.set_b;

    // Label blues so that for i < j all reds lie right of b_i -> b_j: sort
    // by descending slope from a red viewpoint; 1-avoidance makes any red a
    // valid witness and the check below confirms the order for all of them.
    const Point& r0 = q[reds[0]];
    std::sort(blues.begin(), blues.end(), [&](int u, int v) {
        int cmp = compare_slopes(q[u].x - r0.x, q[u].y - r0.y,
                                 q[v].x - r0.x, q[v].y - r0.y);
        if (cmp == 0)
            throw std::invalid_argument("matching: collinear blue pair");
        return cmp > 0;
    });
    for (std::size_t i = 0; i < blues.size(); ++i)
        for (std::size_t j = i + 1; j < blues.size(); ++j)
            for (int r : reds)
                if (orientation(q[blues[i]], q[blues[j]], q[r]) != -1)
                    throw std::logic_error(
                        "matching: blue labeling order is inconsistent");

    Matching m;
    std::vector<bool> matched(reds.size(), false);
    for (int b : blues) {
        // Rotating a vertical line through b counterclockwise meets the reds
        // in ascending slope order of the connecting direction.
        int pick = -1;
        for (std::size_t t = 0; t < reds.size(); ++t) {
            if (matched[t]) continue;
            if (pick < 0) {
                pick = static_cast<int>(t);
                continue;
            }
            const Point& rp = q[reds[t]];
            const Point& rb = q[reds[pick]];
            int cmp = compare_slopes(rp.x - q[b].x, rp.y - q[b].y,
                                     rb.x - q[b].x, rb.y - q[b].y);
            if (cmp == 0)
                throw std::invalid_argument(
                    "matching: collinear triple breaks the slope order");
            if (cmp < 0) pick = static_cast<int>(t);
        }
        matched[pick] = true;
        m.pairs.push_back({reds[pick], b});
    }
    return m;
}

namespace {

struct CutCandidate {
    Line line;
    std::vector<int> above, below, on;
};

// Scans perturbed pair lines of the subset `idx` for a cut with the requested
// side counts. `strict_balance` asks for equal above/below counts per color
// with at most one point of each color on the cut (and equally many of each).
std::optional<CutCandidate> find_cut(const ColoredPointSet& ps,
                                     const std::vector<int>& idx,
                                     bool strict_balance) {
    const int m = static_cast<int>(idx.size());
    int reds = 0, blues = 0;
    for (int i : idx) {
        if (ps[i].color == Color::Red) ++reds;
        else if (ps[i].color == Color::Blue) ++blues;
    }
    const int red_cap = (reds + 1) / 2, blue_cap = (blues + 1) / 2;

    // Realizes the symbolic variant exactly: pi and pj on the requested
    // sides (0 = on the cut) and every other point on its base-line side.
    auto realize = [&](int i, int j, int si, int sj,
                       const std::vector<int>& base_sides)
        -> std::optional<Line> {
        const Point& pi = ps[idx[i]];
        const Point& pj = ps[idx[j]];
        for (int shrink = 2; shrink <= 200; shrink += 2) {
            Rat eps(1, 1);
            for (int t = 0; t < shrink; ++t) eps /= 4;
            Point a(pi.x, pi.y - si * eps);
            Point b(pj.x, pj.y - sj * eps);
            if (a.x == b.x) return std::nullopt;  // keep cuts non-vertical
            Line cand = Line::through(a, b);
            bool ok = cand.side_of(pi) == si && cand.side_of(pj) == sj;
            for (int t = 0; t < m && ok; ++t) {
                if (t == i || t == j) continue;
                if (cand.side_of(ps[idx[t]]) != base_sides[t]) ok = false;
            }
            if (ok) return cand;
        }
        return std::nullopt;
    };

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            // Base counts from the other points.
            int above_r = 0, above_b = 0, below_r = 0, below_b = 0;
            Line base = Line::through(ps[idx[i]], ps[idx[j]]);
            if (base.vertical) continue;
            std::vector<int> base_sides(m, 0);
            for (int t = 0; t < m; ++t) {
                if (t == i || t == j) continue;
                int s = base.side_of(ps[idx[t]]);
                if (s == 0) return std::nullopt;  // not general position
                base_sides[t] = s;
                bool red = ps[idx[t]].color == Color::Red;
                if (s > 0) (red ? above_r : above_b) += 1;
                else (red ? below_r : below_b) += 1;
            }
            for (int si = -1; si <= 1; ++si)
                for (int sj = -1; sj <= 1; ++sj) {
                    int ar = above_r, br = below_r, ab = above_b, bb = below_b;
                    int on_r = 0, on_b = 0;
                    auto account = [&](int t, int s) {
                        bool red = ps[idx[t]].color == Color::Red;
                        if (s > 0) (red ? ar : ab) += 1;
                        else if (s < 0) (red ? br : bb) += 1;
                        else (red ? on_r : on_b) += 1;
                    };
                    account(i, si);
                    account(j, sj);
                    if (ar > red_cap || br > red_cap || ab > blue_cap ||
                        bb > blue_cap)
                        continue;
                    if (strict_balance) {
                        if (ar != br || ab != bb) continue;
                        if (on_r != on_b || on_r > 1) continue;
                    }
                    std::optional<Line> cand =
                        realize(i, j, si, sj, base_sides);
                    if (!cand) continue;
                    CutCandidate cc;
                    cc.line = *cand;
                    for (int t = 0; t < m; ++t) {
                        int s = cc.line.side_of(ps[idx[t]]);
                        if (s > 0) cc.above.push_back(idx[t]);
                        else if (s < 0) cc.below.push_back(idx[t]);
                        else cc.on.push_back(idx[t]);
                    }
                    return cc;
                }
        }
    return std::nullopt;
}

}  // namespace

Line ham_sandwich_cut(const ColoredPointSet& ps) {
    GeneralPositionReport gp = is_general_position(ps);
    if (!gp.ok)
        throw std::invalid_argument("ham_sandwich_cut needs general position");
    std::vector<int> idx(ps.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (ps.size() < 2) {
        return Line::slope_intercept(Rat(0),
                                     ps.size() == 1 ? ps[0].y : Rat(0));
    }
    std::optional<CutCandidate> cut = find_cut(ps, idx, false);
    if (!cut) throw std::logic_error("ham_sandwich_cut: no cut found");
    return cut->line;
}

namespace {

void match_recursive(const ColoredPointSet& ps, const std::vector<int>& idx,
                     Matching& out) {
    if (idx.empty()) return;
    std::vector<int> reds, blues;
    for (int i : idx) {
        if (ps[i].color == Color::Red) reds.push_back(i);
        else blues.push_back(i);
    }
    if (reds.size() != blues.size())
        throw std::logic_error("recursive matching: unbalanced subset");
    if (reds.size() == 1) {
        out.pairs.push_back({reds[0], blues[0]});
        return;
    }
    std::optional<CutCandidate> cut = find_cut(ps, idx, true);
    if (!cut)
        throw std::logic_error("recursive matching: no balanced cut found");
    if (!cut->on.empty()) {
        int r = -1, b = -1;
        for (int t : cut->on)
            (ps[t].color == Color::Red ? r : b) = t;
        out.pairs.push_back({r, b});
    }
    match_recursive(ps, cut->above, out);
    match_recursive(ps, cut->below, out);
}

}  // namespace

Matching recursive_ham_sandwich_matching(const ColoredPointSet& ps) {
    // Distinct x-coordinates keep every canonical cut pair non-vertical.
    ColoredPointSet cur = ps;
    for (long k = 0; k <= 128; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < cur.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cur.size() && ok; ++j)
                if (cur[i].x == cur[j].x) ok = false;
        if (ok) break;
        if (k == 128)
            throw std::runtime_error("matching: rotation search failed");
        Rat t(1, 1013 + 16 * k);
        Rat c, s;
        rotation_from_half_angle(t, c, s);
        cur = rotate_set(ps, c, s);
    }
    std::vector<int> idx(cur.size());
    std::iota(idx.begin(), idx.end(), 0);
    Matching m;
    match_recursive(cur, idx, m);
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

Family stabbing_family_general(const ColoredPointSet& ps) {
    const std::size_t n2 = ps.size();
    if (n2 == 0 || n2 % 2 != 0)
        throw std::invalid_argument("stabbing family needs an even point count");
    GeneralPositionReport gp = is_general_position(ps);
    if (!gp.ok)
        throw std::invalid_argument(
            "stabbing family needs general position; collinear triple (" +
            std::to_string(gp.a) + "," + std::to_string(gp.b) + "," +
            std::to_string(gp.c) + ")");

    Rat rc, rs, shift;
    ColoredPointSet halved = halving_translate(ps, rc, rs, shift);
    for (std::size_t i = 0; i < halved.size(); ++i)
        halved[i].color = sign(halved[i].x) > 0 ? Color::Blue : Color::Red;

    ColoredPointSet transformed = rotate90_transform(halved);
    Matching m = recursive_ham_sandwich_matching(transformed);

    Family f;
    f.relation = FamilyRelation::StabOrCross;
    for (auto [r, b] : m.pairs) f.segments.emplace_back(r, b);
    std::sort(f.segments.begin(), f.segments.end());
    FamilyCheck check = verify_family(f, ps);
    if (!check.ok)
        throw std::logic_error(
            "stabbing_family_general: output failed verification");
    return f;
}

}  // namespace crossfam
