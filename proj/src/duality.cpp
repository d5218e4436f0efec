#include "crossfam/duality.hpp"

#include <algorithm>

namespace crossfam {

Line Line::through(const Point& p, const Point& q, Color c) {
    if (p == q) throw std::invalid_argument("line through coincident points");
    if (p.x == q.x) return Line::vertical_at(p.x, c);
    Rat slope = (q.y - p.y) / (q.x - p.x);
    return Line::slope_intercept(slope, p.y - slope * p.x, c);
}

Line point_to_dual_line(const Point& p) {
    return Line::slope_intercept(p.x, -p.y, p.color);
}

Point line_to_dual_point(const Line& l) {
    if (l.vertical)
        throw std::invalid_argument("vertical line has no dual point");
    return Point(l.a, -l.b, l.color);
}

std::vector<Line> dual_lines(const ColoredPointSet& ps) {
    std::vector<Line> out;
    out.reserve(ps.size());
    for (const Point& p : ps.points) out.push_back(point_to_dual_line(p));
    return out;
}

ColoredPointSet rotate90_transform(const ColoredPointSet& ps) {
    ColoredPointSet out;
    out.points.reserve(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const Point& p = ps[i];
        if (sign(p.x) == 0)
            throw std::invalid_argument(
                "rotate90_transform: point " + std::to_string(i) +
                " lies on the y-axis");
        out.points.emplace_back(Rat(-1) / p.x, p.y / p.x, p.color);
    }
    return out;
}

Point rotate_point(const Point& p, const Rat& c, const Rat& s) {
    return Point(c * p.x - s * p.y, s * p.x + c * p.y, p.color);
}

ColoredPointSet rotate_set(const ColoredPointSet& ps, const Rat& c,
                           const Rat& s) {
    ColoredPointSet out;
    out.points.reserve(ps.size());
    for (const Point& p : ps.points) out.points.push_back(rotate_point(p, c, s));
    return out;
}

void rotation_from_half_angle(const Rat& t, Rat& c, Rat& s) {
    Rat t2 = t * t;
    c = (1 - t2) / (1 + t2);
    s = 2 * t / (1 + t2);
}

ColoredPointSet halving_translate(const ColoredPointSet& ps, Rat& rot_c,
                                  Rat& rot_s, Rat& shift_x) {
    const std::size_t n = ps.size();
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("halving_translate needs an even-size set");
    rot_c = 1;
    rot_s = 0;
    ColoredPointSet cur = ps;
    // Canonical tiny rotations until the two middle x-coordinates differ.
    for (long k = 1; k <= 64; ++k) {
        std::vector<Rat> xs;
        xs.reserve(n);
        for (const Point& p : cur.points) xs.push_back(p.x);
        std::sort(xs.begin(), xs.end());
        if (xs[n / 2 - 1] != xs[n / 2]) {
            shift_x = (xs[n / 2 - 1] + xs[n / 2]) / 2;
            ColoredPointSet out = cur;
            for (Point& p : out.points) p.x -= shift_x;
            return out;
        }
        Rat t(1, 1000 * k);
        Rat c, s;
        rotation_from_half_angle(t, c, s);
        cur = rotate_set(ps, c, s);
        rot_c = c;
        rot_s = s;
    }
    throw std::runtime_error("halving_translate: no separating rotation found");
}

}  // namespace crossfam
