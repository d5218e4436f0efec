#ifndef CROSSFAM_GEOMETRY_HPP
#define CROSSFAM_GEOMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "crossfam/rational.hpp"

namespace crossfam {

enum class Color { None, Red, Blue };

std::string color_name(Color c);

struct Point {
    Rat x;
    Rat y;
    Color color = Color::None;

    Point() = default;
    Point(Rat px, Rat py, Color c = Color::None)
        : x(std::move(px)), y(std::move(py)), color(c) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// An ordered, index-stable list of points. Labels used throughout the toolkit
// are indices into this list.
struct ColoredPointSet {
    std::vector<Point> points;

    ColoredPointSet() = default;
    explicit ColoredPointSet(std::vector<Point> pts) : points(std::move(pts)) {}

    std::size_t size() const { return points.size(); }
    const Point& operator[](std::size_t i) const { return points[i]; }
    Point& operator[](std::size_t i) { return points[i]; }

    std::vector<int> indices_of(Color c) const;
};

// A segment between two points of a ColoredPointSet, stored as index pair i < j.
struct Segment {
    int i;
    int j;

    Segment(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("segment endpoints must differ");
    }

    bool operator==(const Segment& o) const { return i == o.i && j == o.j; }
    bool operator<(const Segment& o) const {
        return i != o.i ? i < o.i : j < o.j;
    }

    bool shares_endpoint(const Segment& o) const {
        return i == o.i || i == o.j || j == o.i || j == o.j;
    }
};

// Classification of a segment pair by where the supporting-line intersection
// falls. FirstStabsSecond means the intersection is interior to the second
// segment and off the first (the first segment's line stabs the second).
enum class PairRelation {
    Crossing,
    FirstStabsSecond,
    SecondStabsFirst,
    Parallel,
    Degenerate,
};

std::string pair_relation_name(PairRelation r);

// Sign of the determinant a1*b2 - a2*b1 + a2*b3 - a3*b2 + a3*b1 - a1*b3 for
// p=(a1,b1), q=(a2,b2), r=(a3,b3). Positive means counterclockwise.
int orientation(const Point& p, const Point& q, const Point& r);

PairRelation classify_pair(const Segment& s1, const Segment& s2,
                           const ColoredPointSet& ps);

// Counterclockwise convex hull as indices into ps. Collinear interior points
// are dropped; for |ps| == 1 or 2 returns all (distinct) indices.
std::vector<int> convex_hull(const ColoredPointSet& ps);

struct GeneralPositionReport {
    bool ok = true;
    int a = -1, b = -1, c = -1;  // offending collinear triple when !ok
};

GeneralPositionReport is_general_position(const ColoredPointSet& ps);

// --- small vector helpers used across modules ---

inline Rat cross(const Rat& ux, const Rat& uy, const Rat& vx, const Rat& vy) {
    return ux * vy - uy * vx;
}

// Slope comparison of directions (dx1,dy1) and (dx2,dy2) with dx > 0 on both:
// negative if slope1 < slope2.
inline int compare_slopes(const Rat& dx1, const Rat& dy1, const Rat& dx2,
                          const Rat& dy2) {
    return sign(dy1 * dx2 - dy2 * dx1) * sign(dx1) * sign(dx2);
}

}  // namespace crossfam

#endif
