#include "udc/strip.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace udc {

StripConfig::StripConfig(double width, double boundary_offset)
    : width(width), boundary_offset(boundary_offset) {
    if (!std::isfinite(width) || !(width > 0.0) || width > 2.0) {
        throw std::invalid_argument("strip width must be in (0, 2]");
    }
    if (!std::isfinite(boundary_offset)) {
        throw std::invalid_argument("strip boundary offset must be finite");
    }
}

long long strip_index(const StripConfig& cfg, double x) {
    return static_cast<long long>(std::floor((x - cfg.boundary_offset) / cfg.width));
}

double restriction_line_x(const StripConfig& cfg, long long k) {
    return cfg.boundary_offset + (static_cast<double>(k) + 0.5) * cfg.width;
}

std::map<long long, std::vector<Point>> partition(const StripConfig& cfg,
                                                  std::span<const Point> points) {
    std::map<long long, std::vector<Point>> buckets;
    for (const Point& p : points) {
        buckets[strip_index(cfg, p.x)].push_back(p);
    }
    return buckets;
}

Segment point_to_segment(const Norm& norm, double line_x, const Point& p,
                         std::size_t source) {
    double adx = std::fabs(p.x - line_x);
    if (adx > 1.0) {
        // A point sitting exactly on a width-2 strip boundary can round to an
        // offset a hair past 1; clamp within the coverage tolerance.
        if (adx > 1.0 + kDefaultEps) {
            throw std::domain_error("point out of horizontal reach of restriction line");
        }
        adx = 1.0;
    }
    const double h = segment_half_length(norm, adx);
    return {p.y - h, p.y + h, source};
}

std::vector<double> stab_greedy(std::vector<Segment> segments) {
    for (const Segment& s : segments) {
        if (!(s.lo <= s.hi)) {
            throw std::invalid_argument("segment with lo > hi");
        }
    }
    std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
        if (a.lo != b.lo) return a.lo > b.lo;
        if (a.hi != b.hi) return a.hi > b.hi;
        return a.source < b.source;
    });

    // Tangent constructions (a disk centered on a strip boundary) produce
    // segments whose endpoints meet up to rounding; the slack keeps one stab
    // from splitting into two there. It admits extra coverage error well
    // below the 1e-9 coverage tolerance.
    constexpr double kStabTol = 1e-12;
    std::vector<double> stabs;
    for (const Segment& s : segments) {
        // Processing in descending lo order, the last stab is the lowest so
        // far; s is already stabbed iff it reaches up to it.
        if (stabs.empty() || s.hi < stabs.back() - kStabTol) {
            stabs.push_back(s.lo);
        }
    }
    return stabs;
}

std::vector<Disk> solve_strip(const Norm& norm, double line_x,
                              std::span<const Point> points) {
    std::vector<Segment> segments;
    segments.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        segments.push_back(point_to_segment(norm, line_x, points[i], i));
    }
    std::vector<Disk> disks;
    for (double stab : stab_greedy(std::move(segments))) {
        disks.push_back(Disk{{line_x, stab}, norm});
    }
    return disks;
}

}  // namespace udc
