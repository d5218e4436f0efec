#ifndef CROSSFAM_DUALITY_HPP
#define CROSSFAM_DUALITY_HPP

#include <vector>

#include "crossfam/line.hpp"

namespace crossfam {

// Dual of the point p=(a,b) is the line y = a*x - b; colors carry over.
Line point_to_dual_line(const Point& p);

// Dual of the line y = a*x + b is the point (a, -b). Vertical lines have no
// dual under this map and are rejected.
Point line_to_dual_point(const Line& l);

std::vector<Line> dual_lines(const ColoredPointSet& ps);

// The 90-degree transform of Lemma-style arguments: (a,b) -> (-1/a, b/a).
// The dual arrangement of the output is the input's dual rotated 90 degrees
// clockwise. Every point must have a nonzero x-coordinate.
ColoredPointSet rotate90_transform(const ColoredPointSet& ps);

// Exact rotation by the rational rotation (c,s) with c^2 + s^2 = 1.
Point rotate_point(const Point& p, const Rat& c, const Rat& s);
ColoredPointSet rotate_set(const ColoredPointSet& ps, const Rat& c, const Rat& s);

// Rational rotation from the half-angle parameter t = tan(theta/2):
// cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2).
void rotation_from_half_angle(const Rat& t, Rat& c, Rat& s);

// Translates ps along x so that the y-axis strictly separates the lower-index
// half from the rest by point count: n/2 points on each side, none on the
// axis. If no vertical halving position exists (tied x-coordinates), the set
// is first rotated by a small canonical rational rotation. Returns the
// transformed set; out parameters receive the applied rotation and shift.
ColoredPointSet halving_translate(const ColoredPointSet& ps, Rat& rot_c,
                                  Rat& rot_s, Rat& shift_x);

}  // namespace crossfam

#endif
