#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "udc/geometry.hpp"

namespace udc {

// Partition of the plane into vertical strips: strip k occupies
// [offset + k*w, offset + (k+1)*w), and disk centers are restricted to the
// line running down the middle of each strip.
struct StripConfig {
    double width;
    double boundary_offset;

    // Throws std::invalid_argument unless 0 < width <= 2. Width 2 is the max
    // norm's default; anything wider leaves points no line can reach.
    StripConfig(double width, double boundary_offset);
};

// Vertical interval of admissible center ordinates on a restriction line.
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t source = 0;  // index of the originating point
};

// Index of the strip containing x; a point exactly on a boundary belongs to
// the strip on its right.
long long strip_index(const StripConfig& cfg, double x);

// x-coordinate of strip k's restriction line: offset + (k + 1/2) * width.
double restriction_line_x(const StripConfig& cfg, long long k);

// Buckets points by strip index, keys ascending. O(n log n).
std::map<long long, std::vector<Point>> partition(const StripConfig& cfg,
                                                  std::span<const Point> points);

// The interval of ordinates on the line x = line_x from which a unit disk
// covers p. Offsets a hair beyond 1 (float rounding at width-2 boundaries)
// are clamped; offsets beyond 1 + kDefaultEps throw std::domain_error.
Segment point_to_segment(const Norm& norm, double line_x, const Point& p,
                         std::size_t source = 0);

// Minimum-cardinality set of ordinates such that every segment contains at
// least one. Greedy sweep: sort by lower endpoint descending and stab the
// highest unstabbed segment at its lower endpoint; a segment counts as
// stabbed when its upper endpoint reaches within 1e-12 of a stab, so tangent
// configurations do not split on rounding noise. Returned stabs are strictly
// decreasing. O(m log m).
std::vector<double> stab_greedy(std::vector<Segment> segments);

// Optimal cover of the given points by unit disks centered on x = line_x:
// one disk per greedy stab, ordered by center ordinate descending. Disk
// centers carry line_x bit-exactly (copied, never recomputed).
std::vector<Disk> solve_strip(const Norm& norm, double line_x,
                              std::span<const Point> points);

}  // namespace udc
