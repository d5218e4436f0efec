#ifndef CROSSFAM_LINE_HPP
#define CROSSFAM_LINE_HPP

#include <optional>
#include <stdexcept>

#include "crossfam/geometry.hpp"

namespace crossfam {

// A line in canonical form: either y = a*x + b or the vertical x = c.
struct Line {
    bool vertical = false;
    Rat a;  // slope (or unused if vertical)
    Rat b;  // intercept, or the x-position when vertical
    Color color = Color::None;

    Line() = default;
    static Line slope_intercept(Rat slope, Rat intercept,
                                Color c = Color::None) {
        Line l;
        l.a = std::move(slope);
        l.b = std::move(intercept);
        l.color = c;
        return l;
    }
    static Line vertical_at(Rat x, Color c = Color::None) {
        Line l;
        l.vertical = true;
        l.b = std::move(x);
        l.color = c;
        return l;
    }
    static Line through(const Point& p, const Point& q, Color c = Color::None);

    bool operator==(const Line& o) const {
        return vertical == o.vertical && (vertical || a == o.a) && b == o.b;
    }

    // y-value at x; undefined for vertical lines.
    Rat y_at(const Rat& x) const {
        if (vertical) throw std::logic_error("y_at on vertical line");
        return a * x + b;
    }

    // +1 if p strictly above (vertical: strictly right), -1 below/left, 0 on.
    int side_of(const Point& p) const {
        if (vertical) return sign(p.x - b);
        return sign(p.y - a * p.x - b);
    }
};

// Intersection x of two non-vertical, non-parallel lines.
inline Rat intersection_x(const Line& l1, const Line& l2) {
    if (l1.vertical || l2.vertical)
        throw std::logic_error("intersection_x needs non-vertical lines");
    if (l1.a == l2.a) throw std::logic_error("parallel lines do not meet");
    return (l2.b - l1.b) / (l1.a - l2.a);
}

inline Point intersection_point(const Line& l1, const Line& l2) {
    if (l1.vertical && l2.vertical)
        throw std::logic_error("parallel vertical lines");
    if (l1.vertical) return Point(l1.b, l2.y_at(l1.b));
    if (l2.vertical) return Point(l2.b, l1.y_at(l2.b));
    Rat x = intersection_x(l1, l2);
    return Point(x, l1.y_at(x));
}

}  // namespace crossfam

#endif
