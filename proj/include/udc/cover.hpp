#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "udc/strip.hpp"

namespace udc {

struct CoverSolution {
    Norm norm;
    std::optional<StripConfig> strip_config;  // absent for oracle output
    std::vector<Disk> disks;
    // Disk count per nonempty strip, ascending strip index. Empty when
    // strip_config is absent.
    std::vector<std::pair<long long, std::size_t>> strip_counts;

    std::size_t count() const { return disks.size(); }
};

struct ShiftCount {
    double shift = 0.0;
    std::size_t count = 0;
};

struct AlgorithmReport {
    CoverSolution solution;
    std::vector<ShiftCount> per_shift_counts;  // one entry per tried shift
    double chosen_shift = 0.0;                 // first minimum on ties
    std::chrono::duration<double, std::milli> wall_time{0.0};
};

// Strip width per norm: 2 for Linf, sqrt(3) for L2, and for general Lp the
// width at which the segment half-length on a strip boundary equals 1/2,
// i.e. 2*(1 - (1/2)^p)^(1/p). User-overridable in the solvers.
double default_width(const Norm& norm);

// Max-norm cover: partition into strips (default width 2), solve each strip
// optimally, concatenate. At width 2 the strips are independent: no output
// square reaches a point outside its own strip.
AlgorithmReport solve_linf(std::span<const Point> points,
                           const StripConfig& cfg = StripConfig(2.0, 0.0));

// Norm-parametric single-shift cover: every strip is solved obliviously,
// assuming all of its points are uncovered.
AlgorithmReport solve_single_shift(const Norm& norm, std::span<const Point> points,
                                   const StripConfig& cfg);

// Runs the single-shift solver at num_shifts evenly spaced boundary offsets
// j*width/num_shifts (plus base_shift) and keeps the best solution.
// width falls back to default_width(norm) when not given.
AlgorithmReport solve_smoothed(const Norm& norm, std::span<const Point> points,
                               int num_shifts = 6,
                               std::optional<double> width = std::nullopt,
                               double base_shift = 0.0);

struct CoverCheck {
    bool covered = false;
    std::optional<std::size_t> witness_index;  // first uncovered, input order
    std::optional<Point> witness;
};

// Independent checker: true iff every point lies within 1 + eps of some disk.
// O((n + m) log m) via per-line ordinate search.
CoverCheck verify_cover(const CoverSolution& solution, std::span<const Point> points,
                        double eps = kDefaultEps);

}  // namespace udc
