#ifndef CROSSFAM_BARSTACKS_HPP
#define CROSSFAM_BARSTACKS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "crossfam/line.hpp"

namespace crossfam {

// Horizontal bars over integer pillars; bars[h-1] spans [a,b] at height h.
// No two bars may share the same (a,b) interval.
struct BarStack {
    int pillars = 0;
    std::vector<std::pair<int, int>> bars;

    int height_count() const { return static_cast<int>(bars.size()); }
};

void validate_barstack(const BarStack& b);

// Wire levels by slot; levels lie in [0, height_count] and may repeat.
// Equal-level slots are distinct wires.
struct WireSequence {
    std::vector<int> levels;
};

// Marble assignment: pillar p (1-based) sits on wire slot slot_of[p-1], or -1
// when p carries no marble. Injective over slots.
struct Marbling {
    std::vector<int> slot_of;

    std::vector<int> pillars_with_marbles() const;
};

struct SideCompatCheck {
    bool ok = true;
    int violating_height = -1;
};

SideCompatCheck validate_side_compatible(const BarStack& b,
                                         const WireSequence& w,
                                         const Marbling& m, bool ordered);

struct SideCompatResult {
    Marbling marbling;
    int size = 0;
    bool complete = true;
    int upper_bound = 0;
};

// Exact maximum side compatible subset via depth-first search over pillars
// with immediate bar checks; equal-level wire slots are canonicalized to the
// lowest free slot.
SideCompatResult max_side_compatible(const BarStack& b, const WireSequence& w,
                                     bool ordered,
                                     double timeout_seconds = 300.0);

// Lemma "all wires": for a bar stack with exactly n bars over n pillars there
// is an n-subsequence of <0..n> for which a full side compatible marbling
// exists. Returns the wires, the marbling, and the reference height used.
struct FullMarbling {
    WireSequence wires;
    Marbling marbling;
    int reference_level = -1;  // marble below bar iff bar height > reference
};

FullMarbling full_marbling_wires(const BarStack& b);

// The floor(n/2) ordered lemma: builds the reachability-ordered assignment
// from the low half of the stack, prunes violating high bars, and returns a
// validated ordered side compatible subset of size >= floor(n/2).
struct OrderedHalfResult {
    std::vector<int> pillars;  // the subset C
    WireSequence wires;
    Marbling marbling;
};

OrderedHalfResult ordered_half_subset(const BarStack& b);

// Bar representation of a line arrangement: bar i spans the indices (1-based)
// of the two lines whose intersection is i-th from below. Rotates the input
// by small exact rotations when intersection heights tie.
BarStack bar_representation(const std::vector<Line>& lines);

// G(B): bar endpoints, joined along bars and along pillars (consecutive
// endpoints). Checks for a cycle that is geometrically non-self-intersecting.
bool barstack_graph_has_simple_cycle(const BarStack& b);

// K_n decomposed into n/2 zig-zag Hamiltonian paths, stacked block by block,
// with n-1 wires below, between, and above the blocks.
struct KnBarStack {
    BarStack stack;
    WireSequence wires;
};

KnBarStack build_kn_barstack(int n);

}  // namespace crossfam

#endif
