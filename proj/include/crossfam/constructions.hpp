#ifndef CROSSFAM_CONSTRUCTIONS_HPP
#define CROSSFAM_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossfam/barstacks.hpp"
#include "crossfam/separation.hpp"

namespace crossfam {

// Deterministic splitmix64-based generator; all randomized construction and
// test inputs derive from explicit seeds.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [lo, hi] without platform-dependent distributions.
    long uniform(long lo, long hi);
    Rat rat_in_unit(long denom = 1 << 20);  // in [-1, 1]

  private:
    std::uint64_t state_;
};

struct DiskSpec {
    Point center;
    Rat radius;
    int count = 0;
    std::optional<Rat> near_collinear_slope;  // strip direction when set
};

struct ConstructionCertificate {
    std::vector<std::pair<std::string, bool>> checks;

    void add(const std::string& name, bool ok) { checks.push_back({name, ok}); }
    bool all_passed() const {
        for (const auto& [n, ok] : checks)
            if (!ok) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& [n, ok] : checks)
            if (!ok) return n;
        return "";
    }
};

struct DiskConstruction {
    ColoredPointSet points;
    std::vector<std::vector<int>> disks;  // point indices per disk
    std::vector<Point> centers;
    ConstructionCertificate certificate;
};

// The 4k-point template: three near-collinear discs in a pinwheel with the
// full separating property and a fourth disc in their core.
DiskConstruction build_nover4(int k, std::uint64_t seed = 0);

// The 24k-point three-wing configuration with maximum crossing family 5k.
// Disk order: D1 D2 D3 A1 A2 A3 B1 B2 B3 C1 C2 C3.
DiskConstruction build_24_config(int k, std::uint64_t seed = 0);

// Replaces each point with floor(n/m) or ceil(n/m) perturbed copies such that
// triples from three distinct clusters keep the original orientation. With
// epsilon = 0 the copies coincide (degenerate, certificate skipped).
struct BlowUpResult {
    ColoredPointSet points;
    std::vector<int> origin;  // copy -> source index
    ConstructionCertificate certificate;
};

BlowUpResult blow_up(const ColoredPointSet& ps, int n, std::uint64_t seed = 0,
                     std::optional<Rat> epsilon = std::nullopt);

// Blue near-vertical arc right, red near-horizontal arc left; every red pair
// line is certified to halve the blues. n divisible by 4.
struct ParallelUpperResult {
    ColoredPointSet points;
    Partition2 partition;  // set_a = blue (avoids), set_b = red
    ConstructionCertificate certificate;
};

ParallelUpperResult build_parallel_upper(int n);

// The focal-parallel-set construction: unit-grid blue lines, incrementally
// stacked red lines, perturbed and rotated so the dual point set is in
// general position straddling the y-axis.
struct FocalConstantResult {
    std::vector<Line> lines;        // perturbed + rotated arrangement
    ColoredPointSet dual_points;
    Partition2 partition;           // set_a = blue side, set_b = red side
    ConstructionCertificate certificate;
    std::vector<Rat> red_heights;   // pre-perturbation recurrence values
};

FocalConstantResult build_focal_constant(int n);

// The 11 blue + 11 red reconstruction admitting no semialternating
// pseudoline; the certificate runs the exhaustive search.
struct NoSemiResult {
    std::vector<Line> lines;
    ConstructionCertificate certificate;
};

NoSemiResult build_no_semialternating();

// --- seeded random instances used across the test and acceptance suites ---

ColoredPointSet random_point_set(int count, std::uint64_t seed,
                                 long coord_range = 1000000);

struct OneAvoidingInstance {
    ColoredPointSet points;
    Partition2 partition;  // set_a avoids set_b
};

OneAvoidingInstance random_one_avoiding(int per_side, std::uint64_t seed);

// Two vertically separable clusters in joint general position (A left).
OneAvoidingInstance random_separable_pair(int per_side, std::uint64_t seed);

BarStack random_barstack_nn(int n, std::uint64_t seed);

}  // namespace crossfam

#endif
