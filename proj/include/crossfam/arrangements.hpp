#ifndef CROSSFAM_ARRANGEMENTS_HPP
#define CROSSFAM_ARRANGEMENTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossfam/line.hpp"

namespace crossfam {

// Shared exact precompute for one set of lines (pairwise non-parallel,
// non-vertical, no three concurrent). Subarrangement combinatorics afterwards
// run on integers only.
class ArrangementBase {
  public:
    explicit ArrangementBase(std::vector<Line> lines);

    const std::vector<Line>& lines() const { return lines_; }
    int size() const { return static_cast<int>(lines_.size()); }

    bool slope_less(int i, int j) const {
        return slope_rank_[i] < slope_rank_[j];
    }
    // Rank of the vertex (m,k) along line m by x-coordinate.
    int vertex_rank(int m, int k) const { return vert_rank_[m][k]; }
    // Does the vertex (i,j) lie strictly above line k? (k != i,j)
    bool vertex_above(int i, int j, int k) const {
        return (vmask_[i][j] >> k) & 1;
    }
    Point vertex(int i, int j) const;

    std::vector<int> lines_by_slope() const;  // indices, slope ascending

  private:
    std::vector<Line> lines_;
    std::vector<int> slope_rank_;
    std::vector<std::vector<int>> vert_rank_;
    std::vector<std::vector<std::uint64_t>> vmask_;
};

// Combinatorial cell complex of a subarrangement. Cells are encoded as
// bitmasks over member positions; bit set = cell above that line.
class CellComplex {
  public:
    CellComplex(const ArrangementBase& base, std::vector<int> members);

    const std::vector<int>& members() const { return members_; }
    int line_count() const { return static_cast<int>(members_.size()); }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    std::uint64_t cell_mask(int c) const { return cells_[c]; }
    int level(int c) const { return __builtin_popcountll(cells_[c]); }
    int cell_id(std::uint64_t mask) const;
    const std::vector<int>& unbounded() const { return unbounded_; }

    // Neighbors of cell c: (cell id, member position of the crossed line).
    const std::vector<std::pair<int, int>>& neighbors(int c) const;

  private:
    bool edge_nonempty(std::uint64_t mask, int m) const;

    const ArrangementBase& base_;
    std::vector<int> members_;
    std::vector<std::uint64_t> cells_;
    std::map<std::uint64_t, int> id_;
    std::vector<int> unbounded_;
    mutable std::vector<std::vector<std::pair<int, int>>> adj_;
    mutable std::vector<bool> adj_done_;
};

enum class SemiMode { Semialternating, MSemialternating, MLine, SpokePath };

// A pseudoline (or spoke-path) witness: the admitted lines, the order they
// are crossed in, and the cells of the underlying cell-path.
struct SemiWitness {
    std::vector<int> member_lines;    // global line ids, ascending
    std::vector<int> crossing_order;  // global line ids, crossing order
    std::vector<std::uint64_t> cell_masks;  // over member positions
    std::uint64_t start_above_mask = 0;
    std::optional<Point> start_sample;  // exact point in the start cell

    int size() const { return static_cast<int>(member_lines.size()); }
};

std::vector<int> level_sequence(const SemiWitness& w);

struct WitnessCheck {
    bool ok = true;
    std::string reason;
};

// Independent re-validation from the crossing order and start mask only.
WitnessCheck validate_witness(const std::vector<Line>& lines,
                              const SemiWitness& w, SemiMode mode,
                              int required_start_level = -1);

// Memoized pseudoline search over one subarrangement.
std::optional<SemiWitness> search_pseudoline(const ArrangementBase& base,
                                             const std::vector<int>& members,
                                             SemiMode mode,
                                             int required_start_level = -1);

struct SemiSearchResult {
    std::optional<SemiWitness> witness;
    std::optional<Line> witness_line;  // MLine mode
    bool complete = true;
};

// Search over the full arrangement or over all equal-color subarrangements
// (largest first). MLine mode searches straight-line witnesses through
// perturbed vertex pairs.
SemiSearchResult find_semialternating(const std::vector<Line>& lines,
                                      SemiMode mode, bool subarrangement_search,
                                      int required_start_level = -1,
                                      double timeout_seconds = 600.0);

// Spoke path of the given (even) size: line-monotone, each pair of crossings
// balancing above/below, start and end in median cells of the admitted set.
std::optional<SemiWitness> find_spoke_path(const std::vector<Line>& lines,
                                           int target,
                                           double timeout_seconds = 600.0);

struct SpokeSetResult {
    int size = 0;
    std::vector<Line> witness;  // the spoke lines
    SemiWitness path;
};

// Maximum spoke set via the dual spoke-path search; the witness lines are
// recovered from sample points of the even cells and verified directly
// against the spoke-set definition.
SpokeSetResult max_spoke_set(const ColoredPointSet& ps, int cap = 12,
                             double timeout_seconds = 600.0);

// Every open unbounded region of the arrangement of `lines` contains a point
// of ps (the spoke-set definition).
bool is_spoke_set(const std::vector<Line>& lines, const ColoredPointSet& ps);

struct ParallelSetResult {
    int size = 0;
    std::vector<Line> witness_lines;  // k+1 lines
    std::vector<int> blues, reds;     // chosen points, step order
};

// Maximum parallel set by exact backtracking over canonical above-sets
// (perturbed point-pair lines); |ps| <= cap.
ParallelSetResult max_parallel_set(const ColoredPointSet& ps, int cap = 16);

// Maximum focal parallel set: straight-line M-semialternating witnesses
// starting at level zero in the dual arrangement.
int max_focal_parallel_set(const ColoredPointSet& ps);

struct DecomposeResult {
    SemiWitness parallel_part;  // strictly increasing level sequence
    SemiWitness spoke_part;     // constant level sequence
};

// Splits an M-semialternating witness by level steps: +2 pairs feed the
// parallel part, 0 pairs the spoke part.
DecomposeResult decompose_ssORps(const std::vector<Line>& lines,
                                 const SemiWitness& witness);

// Drops the downward pairs of a semialternating witness; the result is
// M-semialternating and at least half the size.
SemiWitness semi_to_M(const std::vector<Line>& lines,
                      const SemiWitness& witness);

// One clockwise/counterclockwise rotation step that removes one line from
// below the witness's start cell. Returns the rotated lines and the witness
// with recomputed levels; nullopt when the start level is already zero or no
// single-step rotation decreases it.
struct RotationStep {
    std::vector<Line> lines;
    SemiWitness witness;
};

std::optional<RotationStep> rotate_step_decrease(const std::vector<Line>& lines,
                                                 const SemiWitness& witness);

struct WheelResult {
    int size = 0;
    Point center;
    std::vector<int> order;  // point indices in rotation order
};

// Largest (alternating) wheel over the candidate centers; by default the
// centers sample every cell of the arrangement of all point-pair lines.
WheelResult largest_wheel(const ColoredPointSet& ps, bool alternating,
                          std::vector<Point> candidate_centers = {});

// Exact rational sample point strictly inside the cell with the given mask.
Point sample_point_in_cell(const ArrangementBase& base,
                           const std::vector<int>& members,
                           std::uint64_t mask);

// Canonical tiny rotation until no two points share an x-coordinate (so the
// dual lines are pairwise non-parallel).
ColoredPointSet ensure_distinct_x(const ColoredPointSet& ps);

}  // namespace crossfam

#endif
