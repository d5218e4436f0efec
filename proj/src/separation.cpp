#include "crossfam/separation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crossfam/duality.hpp"

namespace crossfam {

namespace {

// All points of `idx` strictly on one side of line(p,q): returns that sign,
// 0 if the line meets the set (or touches it).
int common_side(const ColoredPointSet& ps, const Point& p, const Point& q,
                const std::vector<int>& idx) {
    int s = 0;
    for (int i : idx) {
        int o = orientation(p, q, ps[i]);
        if (o == 0) return 0;
        if (s == 0) s = o;
        else if (s != o) return 0;
    }
    return s;
}

ColoredPointSet subset(const ColoredPointSet& ps, const std::vector<int>& idx) {
    ColoredPointSet out;
    out.points.reserve(idx.size());
    for (int i : idx) out.points.push_back(ps[i]);
    return out;
}

}  // namespace

SeparabilityResult is_separable(const ColoredPointSet& ps,
                                const std::vector<int>& a,
                                const std::vector<int>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("is_separable: empty side");

    ColoredPointSet pa = subset(ps, a);
    ColoredPointSet pb = subset(ps, b);
    std::vector<int> ha = convex_hull(pa);
    std::vector<int> hb = convex_hull(pb);

    // Candidate normals: hull-edge normals of both hulls plus all hull
    // vertex-to-vertex differences. A strictly separating direction, when one
    // exists, is always among these.
    std::vector<std::pair<Rat, Rat>> normals;
    auto add_edge_normals = [&](const ColoredPointSet& s,
                                const std::vector<int>& hull) {
        const std::size_t m = hull.size();
        if (m < 2) return;
        for (std::size_t i = 0; i < m; ++i) {
            const Point& u = s[hull[i]];
            const Point& v = s[hull[(i + 1) % m]];
            if (u == v) continue;
            normals.emplace_back(u.y - v.y, v.x - u.x);
            if (m == 2) break;
        }
    };
    add_edge_normals(pa, ha);
    add_edge_normals(pb, hb);
    for (int i : ha)
        for (int j : hb)
            if (!(pa[i] == pb[j]))
                normals.emplace_back(pb[j].x - pa[i].x, pb[j].y - pa[i].y);

    for (const auto& [nx, ny] : normals) {
        Rat amin, amax, bmin, bmax;
        bool first = true;
        for (int i : a) {
            Rat v = nx * ps[i].x + ny * ps[i].y;
            if (first || v < amin) amin = v;
            if (first || v > amax) amax = v;
            first = false;
        }
        first = true;
        for (int i : b) {
            Rat v = nx * ps[i].x + ny * ps[i].y;
            if (first || v < bmin) bmin = v;
            if (first || v > bmax) bmax = v;
            first = false;
        }
        Rat threshold;
        if (amax < bmin) threshold = (amax + bmin) / 2;
        else if (bmax < amin) threshold = (bmax + amin) / 2;
        else continue;
        Line witness;
        if (sign(ny) == 0)
            witness = Line::vertical_at(threshold / nx);
        else
            witness = Line::slope_intercept(-nx / ny, threshold / ny);
        return {true, witness};
    }
    return {false, std::nullopt};
}

bool separates(const ColoredPointSet& ps, const std::vector<int>& a,
               const std::vector<int>& b, const std::vector<int>& c) {
    if (a.empty() || b.empty() || c.empty())
        throw std::invalid_argument("separates: empty set");
    std::vector<int> bc = b;
    bc.insert(bc.end(), c.begin(), c.end());
    if (!is_separable(ps, a, bc).separable) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            int sb = common_side(ps, ps[a[i]], ps[a[j]], b);
            if (sb == 0) return false;
            int sc = common_side(ps, ps[a[i]], ps[a[j]], c);
            if (sc == 0 || sb == sc) return false;
        }
    return true;
}

bool avoids(const ColoredPointSet& ps, const std::vector<int>& a,
            const std::vector<int>& b) {
    if (a.size() < 2 || b.empty())
        throw std::invalid_argument("avoids: |A| >= 2 and B nonempty required");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (common_side(ps, ps[a[i]], ps[a[j]], b) == 0) return false;
    return true;
}

bool mutually_avoiding(const ColoredPointSet& ps, const std::vector<int>& a,
                       const std::vector<int>& b) {
    return avoids(ps, a, b) && avoids(ps, b, a);
}

bool is_one_avoiding(const ColoredPointSet& ps, const Partition2& partition) {
    const auto& a = partition.set_a;
    const auto& b = partition.set_b;
    if (a.empty() || b.empty())
        throw std::invalid_argument("is_one_avoiding: empty side");
    if (!is_separable(ps, a, b).separable) return false;
    if (a.size() < 2) return true;
    return avoids(ps, a, b);
}

RankTables compute_rank_tables(const ColoredPointSet& ps,
                               const std::vector<int>& a,
                               const std::vector<int>& b) {
    SeparabilityResult sep = is_separable(ps, a, b);
    if (!sep.separable)
        throw std::invalid_argument("rank tables require separable sets");
    const Line& w = *sep.witness;
    // Normal of the witness pointing from the A side toward the B side.
    Rat nx, ny;
    if (w.vertical) {
        nx = 1;
        ny = 0;
    } else {
        nx = -w.a;
        ny = 1;
    }
    // Orient n toward B.
    {
        const Point& pa = ps[a[0]];
        const Point& pb = ps[b[0]];
        if (nx * (pb.x - pa.x) + ny * (pb.y - pa.y) < 0) {
            nx = -nx;
            ny = -ny;
        }
    }
    // Frame coordinates: u along n, v along the separating direction
    // d = ccw90(n). Ranks sort by ascending dv/du of the connecting vector.
    auto frame_u = [&](const Point& p) -> Rat { return nx * p.x + ny * p.y; };
    auto frame_v = [&](const Point& p) -> Rat { return -ny * p.x + nx * p.y; };

    auto ranks_from = [&](const std::vector<int>& from,
                          const std::vector<int>& to) {
        std::vector<std::vector<int>> table(from.size(),
                                            std::vector<int>(to.size()));
        for (std::size_t k = 0; k < from.size(); ++k) {
            const Point& p = ps[from[k]];
            std::vector<int> order(to.size());
            for (std::size_t m = 0; m < to.size(); ++m)
                order[m] = static_cast<int>(m);
            std::sort(order.begin(), order.end(), [&](int m1, int m2) {
                const Point& q1 = ps[to[m1]];
                const Point& q2 = ps[to[m2]];
                int cmp = compare_slopes(frame_u(q1) - frame_u(p),
                                         frame_v(q1) - frame_v(p),
                                         frame_u(q2) - frame_u(p),
                                         frame_v(q2) - frame_v(p));
                if (cmp == 0)
                    throw std::invalid_argument(
                        "rank tables: collinear viewpoint triple");
                return cmp < 0;
            });
            for (std::size_t r = 0; r < order.size(); ++r)
                table[k][order[r]] = static_cast<int>(r) + 1;
        }
        return table;
    };

    RankTables rt;
    rt.rank_from_a = ranks_from(a, b);
    rt.rank_from_b = ranks_from(b, a);
    return rt;
}

namespace {

bool rank_backtrack(const RankTables& rt, int s, int pos,
                    std::vector<bool>& used_a, std::vector<bool>& used_b,
                    std::vector<int>& pick_a, std::vector<int>& pick_b) {
    if (pos > s) return true;
    for (int k = 0; k < s; ++k) {
        if (used_a[k]) continue;
        for (int m = 0; m < s; ++m) {
            if (used_b[m]) continue;
            if (rt.rank_from_a[k][m] != pos || rt.rank_from_b[m][k] != pos)
                continue;
            used_a[k] = used_b[m] = true;
            pick_a.push_back(k);
            pick_b.push_back(m);
            if (rank_backtrack(rt, s, pos + 1, used_a, used_b, pick_a, pick_b))
                return true;
            used_a[k] = used_b[m] = false;
            pick_a.pop_back();
            pick_b.pop_back();
        }
    }
    return false;
}

}  // namespace

std::optional<RankLabeling> rank_condition(const ColoredPointSet& ps,
                                           const std::vector<int>& a,
                                           const std::vector<int>& b,
                                           bool strong) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("rank_condition: equal nonempty sizes");
    const int s = static_cast<int>(a.size());
    RankTables rt = compute_rank_tables(ps, a, b);

    if (strong) {
        // Strong condition holds iff every a sees B in one common order and
        // every b sees A in one common order.
        for (int k = 1; k < s; ++k)
            if (rt.rank_from_a[k] != rt.rank_from_a[0]) return std::nullopt;
        for (int m = 1; m < s; ++m)
            if (rt.rank_from_b[m] != rt.rank_from_b[0]) return std::nullopt;
        RankLabeling lab;
        lab.a_order.resize(s);
        lab.b_order.resize(s);
        for (int m = 0; m < s; ++m)
            lab.b_order[rt.rank_from_a[0][m] - 1] = b[m];
        for (int k = 0; k < s; ++k)
            lab.a_order[rt.rank_from_b[0][k] - 1] = a[k];
        return lab;
    }

    std::vector<bool> used_a(s, false), used_b(s, false);
    std::vector<int> pick_a, pick_b;
    if (!rank_backtrack(rt, s, 1, used_a, used_b, pick_a, pick_b))
        return std::nullopt;
    RankLabeling lab;
    for (int i = 0; i < s; ++i) {
        lab.a_order.push_back(a[pick_a[i]]);
        lab.b_order.push_back(b[pick_b[i]]);
    }
    return lab;
}


ColoredPointSet rotate_vertical_separation(const ColoredPointSet& ps,
                                           const std::vector<int>& right,
                                           const std::vector<int>& left) {
    auto acceptable = [&](const ColoredPointSet& q) {
        Rat left_max, right_min;
        bool first = true;
        for (int i : left) {
            if (first || q[i].x > left_max) left_max = q[i].x;
            first = false;
        }
        first = true;
        for (int i : right) {
            if (first || q[i].x < right_min) right_min = q[i].x;
            first = false;
        }
        if (!(left_max < right_min)) return false;
        auto distinct_x = [&](const std::vector<int>& idx) {
            for (std::size_t u = 0; u < idx.size(); ++u)
                for (std::size_t v = u + 1; v < idx.size(); ++v)
                    if (q[idx[u]].x == q[idx[v]].x) return false;
            return true;
        };
        return distinct_x(left) && distinct_x(right);
    };
    if (acceptable(ps)) return ps;

    SeparabilityResult sep = is_separable(ps, right, left);
    if (!sep.separable)
        throw std::invalid_argument(
            "rotate_vertical_separation: sides not separable");
    const Line& w = *sep.witness;
    Rat nx = w.vertical ? Rat(1) : Rat(-w.a);
    Rat ny = w.vertical ? Rat(0) : Rat(1);
    const Point& pr = ps[right[0]];
    const Point& pl = ps[left[0]];
    if (nx * (pr.x - pl.x) + ny * (pr.y - pl.y) < 0) {
        nx = -nx;
        ny = -ny;
    }
    // Half-angle tangent of the rotation taking n to +x, rationalized with
    // increasing precision and small offsets until the exact test passes.
    double dn = std::sqrt(rat_to_double(nx) * rat_to_double(nx) +
                          rat_to_double(ny) * rat_to_double(ny));
    double c0 = rat_to_double(nx) / dn;
    double s0 = -rat_to_double(ny) / dn;
    double t0 = (std::abs(1.0 + c0) < 1e-12) ? 1e9 : s0 / (1.0 + c0);
    for (long prec = 1 << 12; prec < (1L << 40); prec <<= 2) {
        for (long off = 0; off <= 8; ++off) {
            for (int dir : {1, -1}) {
                if (off == 0 && dir == -1) continue;
                Rat t(static_cast<long>(std::llround(t0 * prec)) + dir * off,
                      prec);
                Rat c, s;
                rotation_from_half_angle(t, c, s);
                ColoredPointSet rotated = rotate_set(ps, c, s);
                if (acceptable(rotated)) return rotated;
            }
        }
    }
    throw std::runtime_error(
        "rotate_vertical_separation: no suitable rotation found");
}

}  // namespace crossfam

