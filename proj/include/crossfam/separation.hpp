#ifndef CROSSFAM_SEPARATION_HPP
#define CROSSFAM_SEPARATION_HPP

#include <optional>
#include <vector>

#include "crossfam/line.hpp"

namespace crossfam {

// A two-part partition of (a subset of) a point set, by indices.
struct Partition2 {
    std::vector<int> set_a;
    std::vector<int> set_b;
};

struct SeparabilityResult {
    bool separable = false;
    std::optional<Line> witness;  // strictly separating line when separable
};

// True iff the convex hulls of A and B are disjoint; the witness line has all
// of A strictly on one side and all of B strictly on the other.
SeparabilityResult is_separable(const ColoredPointSet& ps,
                                const std::vector<int>& a,
                                const std::vector<int>& b);

// Definition-1 separating property: A and B∪C separable, and every line
// through two points of A has all of B strictly on one side and all of C
// strictly on the other. |A| == 1 makes the line condition vacuous.
bool separates(const ColoredPointSet& ps, const std::vector<int>& a,
               const std::vector<int>& b, const std::vector<int>& c);

// A avoids B: no line through two points of A meets the convex hull of B.
bool avoids(const ColoredPointSet& ps, const std::vector<int>& a,
            const std::vector<int>& b);

bool mutually_avoiding(const ColoredPointSet& ps, const std::vector<int>& a,
                       const std::vector<int>& b);

// Separable and set_a avoids set_b (vacuous for |set_a| < 2).
bool is_one_avoiding(const ColoredPointSet& ps, const Partition2& partition);

// Rank labelings in the sense of the rank condition: a_order[i] sees
// b_order[i] at rank i+1 and vice versa (strong: at the respective indices
// for all pairs).
struct RankLabeling {
    std::vector<int> a_order;
    std::vector<int> b_order;
};

// Searches for a (strong) rank labeling of two separable equal-size sets.
// Ranks are computed in the frame where the separating line is vertical with
// A left of B, sweeping counterclockwise from the separating direction.
std::optional<RankLabeling> rank_condition(const ColoredPointSet& ps,
                                           const std::vector<int>& a,
                                           const std::vector<int>& b,
                                           bool strong);

// rank_matrix[k][m] = rank at which a[k] sees b[m] (1-based), and the
// transpose for b. Shared by rank_condition and can_be_crossed.
struct RankTables {
    std::vector<std::vector<int>> rank_from_a;  // |A| x |B|
    std::vector<std::vector<int>> rank_from_b;  // |B| x |A|
};

RankTables compute_rank_tables(const ColoredPointSet& ps,
                               const std::vector<int>& a,
                               const std::vector<int>& b);

// Rotates ps by an exact rational rotation so that every point of `right`
// gets a strictly larger x-coordinate than every point of `left`, with
// distinct x inside each side. Requires the two sides to be separable.
ColoredPointSet rotate_vertical_separation(const ColoredPointSet& ps,
                                           const std::vector<int>& right,
                                           const std::vector<int>& left);

}  // namespace crossfam

#endif
