#include "crossfam/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace crossfam {

std::string color_name(Color c) {
    switch (c) {
        case Color::Red: return "red";
        case Color::Blue: return "blue";
        default: return "none";
    }
}

std::string pair_relation_name(PairRelation r) {
    switch (r) {
        case PairRelation::Crossing: return "crossing";
        case PairRelation::FirstStabsSecond: return "first-stabs-second";
        case PairRelation::SecondStabsFirst: return "second-stabs-first";
        case PairRelation::Parallel: return "parallel";
        default: return "degenerate";
    }
}

std::vector<int> ColoredPointSet::indices_of(Color c) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].color == c) out.push_back(static_cast<int>(i));
    return out;
}

int orientation(const Point& p, const Point& q, const Point& r) {
    Rat det = p.x * q.y - q.x * p.y + q.x * r.y - r.x * q.y + r.x * p.y -
              p.x * r.y;
    return sign(det);
}

PairRelation classify_pair(const Segment& s1, const Segment& s2,
                           const ColoredPointSet& ps) {
    if (s1.shares_endpoint(s2)) return PairRelation::Degenerate;
    const Point& p = ps[s1.i];
    const Point& q = ps[s1.j];
    const Point& r = ps[s2.i];
    const Point& s = ps[s2.j];

    int o_rsp = orientation(r, s, p);
    int o_rsq = orientation(r, s, q);
    int o_pqr = orientation(p, q, r);
    int o_pqs = orientation(p, q, s);
    if (o_rsp == 0 || o_rsq == 0 || o_pqr == 0 || o_pqs == 0)
        return PairRelation::Degenerate;

    // Parallel supporting lines never meet; the paper files those under
    // "parallel" together with intersections outside both segments.
    if (sign(cross(q.x - p.x, q.y - p.y, s.x - r.x, s.y - r.y)) == 0)
        return PairRelation::Parallel;

    bool interior1 = (o_rsp != o_rsq);  // line(r,s) splits p from q
    bool interior2 = (o_pqr != o_pqs);
    if (interior1 && interior2) return PairRelation::Crossing;
    if (interior1) return PairRelation::SecondStabsFirst;
    if (interior2) return PairRelation::FirstStabsSecond;
    return PairRelation::Parallel;
}

std::vector<int> convex_hull(const ColoredPointSet& ps) {
    const std::size_t n = ps.size();
    if (n == 0) throw std::invalid_argument("convex hull of empty set");
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (ps[a].x != ps[b].x) return ps[a].x < ps[b].x;
        return ps[a].y < ps[b].y;
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int a, int b) { return ps[a] == ps[b]; }),
              idx.end());
    if (idx.size() <= 2) return idx;

    auto build = [&](const std::vector<int>& order) {
        std::vector<int> h;
        for (int i : order) {
            while (h.size() >= 2 &&
                   orientation(ps[h[h.size() - 2]], ps[h.back()], ps[i]) <= 0)
                h.pop_back();
            h.push_back(i);
        }
        return h;
    };

    std::vector<int> lower = build(idx);
    std::vector<int> rev(idx.rbegin(), idx.rend());
    std::vector<int> upper = build(rev);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

GeneralPositionReport is_general_position(const ColoredPointSet& ps) {
    const int n = static_cast<int>(ps.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (orientation(ps[a], ps[b], ps[c]) == 0)
                    return {false, a, b, c};
    return {};
}

}  // namespace crossfam
