#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udc/cover.hpp"

namespace udc {

struct Box {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;
};

// Seeded generator with a pinned, portable algorithm (mt19937_64; doubles
// from the top 53 bits), so instances reproduce from the seed across
// implementations. The derivations are spelled out in the README.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    Point in_box(const Box& box);
    // Uniform inside the L2 unit disk around center (polar, r = sqrt(u)).
    Point in_unit_disk(const Point& center);

private:
    std::mt19937_64 gen_;
};

// One point per non-empty line not starting with '#'; "x y" or "x,y".
// Throws std::runtime_error naming the line on malformed or non-finite input.
std::vector<Point> parse_points(std::string_view text);

// Accepts "l2", "linf", "lp:<p>". Throws std::invalid_argument otherwise.
Norm parse_norm(const std::string& text);

std::vector<Point> gen_uniform(std::size_t n, const Box& box, std::uint64_t seed);

// n points spread round-robin over unit disks at the given centers, uniform
// inside each disk.
std::vector<Point> gen_clusters(std::size_t n, std::span<const Point> centers,
                                std::uint64_t seed);

// 17 significant digits; round-trips exactly through strtod.
std::string format_double(double value);

// Instance file emitter, inverse of parse_points.
std::string emit_points(std::span<const Point> points, const std::string& comment);

// Stable key order {"norm","width","shift","count","disks","per_shift_counts"};
// reals printed with 17 significant digits.
std::string emit_json(const AlgorithmReport& report);
// Oracle output: {"norm","count","disks"} (no strip metadata).
std::string emit_json(const CoverSolution& solution);

// Standalone SVG: points as dots, disks as circles (L2) or squares (Linf; Lp
// is drawn as the L2 circle with a caption note), restriction lines dashed,
// strip boundaries solid. Viewport fits the bounding box plus a unit margin.
std::string emit_svg(const AlgorithmReport& report, std::span<const Point> points);

struct BenchRecord {
    std::size_t n = 0;
    std::string algorithm;
    Norm norm;
    std::uint64_t seed = 0;
    std::size_t disk_count = 0;
    double millis = 0.0;
};

// Per-instance seed: splitmix64 finalizer over (seed, n, repeat).
std::uint64_t bench_instance_seed(std::uint64_t seed, std::size_t n, int repeat);

// Times the solve (generation excluded) on uniform instances of each size in
// a density-1 box (side sqrt(n)). algo is "single", "smooth" or "linf".
std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes,
                                   const std::string& algo, const Norm& norm,
                                   int repeats, std::uint64_t seed);

// Header plus one "n,algorithm,norm,seed,count,millis" line per record.
std::string bench_csv(std::span<const BenchRecord> records);

}  // namespace udc
