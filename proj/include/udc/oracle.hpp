#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "udc/cover.hpp"

namespace udc {

inline constexpr std::size_t kOracleDefaultLimit = 16;
// Coverage is tracked in 64-bit masks; instances beyond this are refused.
inline constexpr std::size_t kOracleHardLimit = 64;
inline constexpr std::size_t kStabBruteforceLimit = 12;

// Candidate disk centers normalized so that some optimal solution uses only
// these positions, plus the input point indices each candidate covers.
struct CandidateSet {
    Norm norm;
    std::size_t num_points = 0;
    std::vector<Point> centers;
    std::vector<std::vector<std::size_t>> coverage;
};

// L2: all input points plus both intersections of unit circles around every
// pair at distance <= 2 (tangent pairs yield one merged candidate). Linf:
// centers (p.x + 1, q.y - 1) over all pairs, squares pinned left and top.
// Near-duplicates within 1e-9 are merged; candidates covering nothing are
// dropped. Throws std::invalid_argument for other norms or when the instance
// exceeds the limit.
CandidateSet generate_candidates(const Norm& norm, std::span<const Point> points,
                                 std::size_t limit = kOracleDefaultLimit);

// Provably minimum-cardinality subset of candidate disks covering all points,
// by branch and bound: branch on candidates covering the element with fewest
// covering candidates, prune with a greedy upper bound and a counting lower
// bound. Deterministic output order.
CoverSolution set_cover_exact(const CandidateSet& candidates);

// Minimum number of ordinates stabbing all segments, by exhaustive search
// over subsets of segment lower endpoints (some optimum uses only those).
// Throws std::invalid_argument beyond the limit.
std::size_t min_stabbing_bruteforce(std::span<const Segment> segments,
                                    std::size_t limit = kStabBruteforceLimit);

}  // namespace udc
