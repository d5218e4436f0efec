#ifndef CROSSFAM_CROSSING_SOLVERS_HPP
#define CROSSFAM_CROSSING_SOLVERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crossfam/separation.hpp"
#include "crossfam/tables.hpp"

namespace crossfam {

enum class FamilyRelation { Crossing, Parallel, StabOrCross };

std::string family_relation_name(FamilyRelation r);

// A set of pairwise endpoint-disjoint segments in which every unordered pair
// satisfies the named relation.
struct Family {
    std::vector<Segment> segments;
    FamilyRelation relation = FamilyRelation::Crossing;

    std::size_t size() const { return segments.size(); }
};

struct FamilyCheck {
    bool ok = true;
    std::optional<std::pair<Segment, Segment>> violating;
};

FamilyCheck verify_family(const Family& f, const ColoredPointSet& ps);

bool pair_satisfies(PairRelation rel, FamilyRelation wanted);

enum class SegmentFilter { All, BicoloredOnly };

struct SolveResult {
    Family family;
    bool complete = true;
    int upper_bound = 0;  // proven bound; equals family size when complete
};

// Exact maximum family via branch-and-bound maximum clique over the
// compatibility graph of candidate segments. Deterministic. upper_hint (when
// >= 0) only prunes. On timeout the best family found so far is returned with
// complete=false and a proven upper bound.
SolveResult max_pairwise_family(const ColoredPointSet& ps, FamilyRelation rel,
                                SegmentFilter filter = SegmentFilter::All,
                                int upper_hint = -1,
                                double timeout_seconds = 300.0);

// Perfect bicolored crossing family exhausting A and B, built from a rank
// labeling when one exists; verified before return.
std::optional<Family> can_be_crossed(const ColoredPointSet& ps,
                                     const std::vector<int>& a,
                                     const std::vector<int>& b);

// The sqrt(n) crossing family of a 1-avoiding point set, extracted from a
// monotone subsequence of the middle row of T(B*, R*).
Family sqrt_family_one_avoiding(const ColoredPointSet& ps,
                                const Partition2& partition);

// Generic exact maximum clique over an adjacency matrix; exposed for reuse by
// the side-compatibility and experiment tooling.
struct CliqueResult {
    std::vector<int> members;
    bool complete = true;
    int upper_bound = 0;
};

CliqueResult max_clique(const std::vector<std::vector<bool>>& adj,
                        int upper_hint = -1, double timeout_seconds = 300.0);

}  // namespace crossfam

#endif
