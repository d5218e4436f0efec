#ifndef CROSSFAM_TABLES_HPP
#define CROSSFAM_TABLES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossfam/duality.hpp"
#include "crossfam/separation.hpp"

namespace crossfam {

// Table T(B*, R*): row i lists red labels (1..n) in the order the i-th blue
// dual line meets the red dual lines. Blue rows are ordered the way every
// red line sees the blues; red labels come from the first blue row.
struct PermTable {
    std::vector<std::vector<int>> rows;
    std::vector<int> row_sources;    // rows[i] came from blues[row_sources[i]]
    std::vector<int> label_sources;  // label k (1-based) is reds[label_sources[k-1]]
};

// Builds the table for explicit line sets. Requires that every red meets the
// blues in one common order (the 1-avoiding dual property); throws otherwise.
PermTable build_table_from_lines(const std::vector<Line>& blues,
                                 const std::vector<Line>& reds);

// Table of the dual arrangement of a 1-avoiding point set; set_a is the
// avoiding (blue) side. The set is rotated internally so the colors are
// separated by a vertical line with the red side on the left. row_sources and
// label_sources refer to point indices of ps.
PermTable build_table(const ColoredPointSet& ps, const Partition2& partition);

struct DiagonalResult {
    std::vector<int> row_positions;  // indices into table.rows, ascending
    std::vector<int> elements;       // chosen element labels
    std::vector<int> diagonal;       // diagonal entries, position by position
};

// Exact search for a k x k subtable with a distinct diagonal. Element subsets
// are enumerated lexicographically; row choice uses the prefix structure of
// distinct-diagonal subtables (row i starts with exactly the earlier diagonal
// entries) for pruning.
std::optional<DiagonalResult> find_distinct_diagonal(const PermTable& table,
                                                     int k);

struct AllowableSequence {
    std::vector<std::vector<int>> perms;  // permutations of 1..n
    // Per move: the reversed substrings as (start position, length), 0-based.
    std::vector<std::vector<std::pair<int, int>>> move_log;
    bool simple = false;
    // element_to_point[e-1] = point index carrying element label e.
    std::vector<int> element_to_point;
};

// Circular-sequence construction: sweep the dual arrangement left to right;
// pairs swap in slope order of their connecting lines. Parallel connecting
// lines produce grouped (non-simple) moves. Points are relabeled so the first
// permutation is the identity.
AllowableSequence allowable_sequence_of(const ColoredPointSet& ps);

struct AllowableValidation {
    bool ok = true;
    bool simple = false;
    std::string violation;
};

AllowableValidation validate_allowable(const AllowableSequence& seq);

struct SimpleDiagonal {
    std::vector<int> row_steps;               // 1-based indices into seq.perms
    std::vector<std::vector<int>> table_rows;  // rows restricted to 2..n
    std::vector<int> diagonal;
    bool distinct = true;
};

// Rows where element 1 swaps with its right neighbour; the resulting
// combinatorial table T(S, [2..n]) has a distinct diagonal.
SimpleDiagonal diagonal_from_simple_allowable(const AllowableSequence& seq);

// The quadratic-length permutation sequence with no distinct-diagonal
// n-subset; n must be even and at least 4.
std::vector<std::vector<int>> build_theta_n2_sequence(int n);

// Wraps a raw permutation sequence as a PermTable (labels = values).
PermTable table_from_rows(std::vector<std::vector<int>> rows);

// Move decomposition for one allowable step: splits next vs prev into
// non-overlapping reversed substrings, each of size >= 2 and increasing in
// prev. Returns nullopt when next is not reachable by such a move.
std::optional<std::vector<std::pair<int, int>>> decompose_move(
    const std::vector<int>& prev, const std::vector<int>& next);

}  // namespace crossfam

#endif
