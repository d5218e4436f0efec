#ifndef CROSSFAM_MATCHINGS_HPP
#define CROSSFAM_MATCHINGS_HPP

#include <vector>

#include "crossfam/crossing_solvers.hpp"

namespace crossfam {

// A perfect bicolored matching over (a subset of) a point set.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (red index, blue index)
};

// The rotating-line greedy matching of a 1-avoiding point set: every edge
// joins set_b (red) to set_a (blue) and the edges are pairwise non-crossing.
Matching non_crossing_bicolored_matching(const ColoredPointSet& ps,
                                         const Partition2& partition);

// An exact simultaneous bisector: at most ceil(|color|/2) points of each
// color strictly on each side. Found by scanning perturbed point-pair lines.
Line ham_sandwich_cut(const ColoredPointSet& ps);

// A stabbing family of size n for any 2n-point set in general position:
// halving translation, the 90-degree transform, then a recursive
// ham-sandwich non-crossing matching mapped back.
Family stabbing_family_general(const ColoredPointSet& ps);

// The recursive non-crossing bicolored matching used by the stabbing-family
// construction; exposed for the relation-exchange audits.
Matching recursive_ham_sandwich_matching(const ColoredPointSet& ps);

}  // namespace crossfam

#endif
