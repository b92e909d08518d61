#include "udc/cover.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace udc {
namespace {

int worker_budget() {
    if (const char* env = std::getenv("UDC_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min(v, 64L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(0..count-1) on up to max_workers threads. Callers index into
// preallocated slots, so the schedule never affects results.
template <typename Fn>
void for_each_index(std::size_t count, int max_workers, Fn&& fn) {
    const int workers = static_cast<int>(
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, max_workers))));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

AlgorithmReport solve_with_config(const Norm& norm, std::span<const Point> points,
                                  const StripConfig& cfg, int max_workers) {
    const auto t0 = std::chrono::steady_clock::now();

    auto buckets = partition(cfg, points);
    std::vector<std::pair<long long, std::vector<Point>>> strips;
    strips.reserve(buckets.size());
    for (auto& [k, pts] : buckets) {
        strips.emplace_back(k, std::move(pts));
    }

    std::vector<std::vector<Disk>> per_strip(strips.size());
    for_each_index(strips.size(), max_workers, [&](std::size_t i) {
        const double line_x = restriction_line_x(cfg, strips[i].first);
        per_strip[i] = solve_strip(norm, line_x, strips[i].second);
    });

    CoverSolution solution;
    solution.norm = norm;
    solution.strip_config = cfg;
    for (std::size_t i = 0; i < strips.size(); ++i) {
        solution.strip_counts.emplace_back(strips[i].first, per_strip[i].size());
        solution.disks.insert(solution.disks.end(), per_strip[i].begin(), per_strip[i].end());
    }

    AlgorithmReport report;
    report.per_shift_counts = {{cfg.boundary_offset, solution.count()}};
    report.chosen_shift = cfg.boundary_offset;
    report.solution = std::move(solution);
    report.wall_time = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace

double default_width(const Norm& norm) {
    switch (norm.kind) {
        case NormKind::Linf:
            return 2.0;
        case NormKind::L2:
            return std::sqrt(3.0);
        case NormKind::Lp:
            break;
    }
    return 2.0 * std::pow(1.0 - std::pow(0.5, norm.p), 1.0 / norm.p);
}

AlgorithmReport solve_linf(std::span<const Point> points, const StripConfig& cfg) {
    return solve_with_config(Norm::linf(), points, cfg, worker_budget());
}

AlgorithmReport solve_single_shift(const Norm& norm, std::span<const Point> points,
                                   const StripConfig& cfg) {
    return solve_with_config(norm, points, cfg, worker_budget());
}

AlgorithmReport solve_smoothed(const Norm& norm, std::span<const Point> points,
                               int num_shifts, std::optional<double> width,
                               double base_shift) {
    if (num_shifts < 1) {
        throw std::invalid_argument("num_shifts must be >= 1");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const double w = width.value_or(default_width(norm));

    std::vector<AlgorithmReport> candidates(static_cast<std::size_t>(num_shifts));
    const int budget = worker_budget();
    for_each_index(candidates.size(), budget, [&](std::size_t j) {
        const double alpha = base_shift + static_cast<double>(j) * w / num_shifts;
        // strip-level parallelism stays off here; the shifts already use the budget
        candidates[j] = solve_with_config(norm, points, StripConfig(w, alpha), 1);
    });

    std::size_t best = 0;
    for (std::size_t j = 1; j < candidates.size(); ++j) {
        if (candidates[j].solution.count() < candidates[best].solution.count()) {
            best = j;
        }
    }

    AlgorithmReport report;
    for (const auto& cand : candidates) {
        report.per_shift_counts.push_back(
            {cand.chosen_shift, cand.solution.count()});
    }
    report.chosen_shift = candidates[best].chosen_shift;
    report.solution = std::move(candidates[best].solution);
    report.wall_time = std::chrono::steady_clock::now() - t0;
    return report;
}

CoverCheck verify_cover(const CoverSolution& solution, std::span<const Point> points,
                        double eps) {
    // Group disk centers by line abscissa, ordinates sorted. Coverage along a
    // line is an interval around the point's ordinate, so only the nearest
    // center above and below need checking.
    std::vector<Point> centers;
    centers.reserve(solution.disks.size());
    for (const Disk& d : solution.disks) centers.push_back(d.center);
    std::sort(centers.begin(), centers.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });

    std::vector<double> line_xs;
    std::vector<std::size_t> line_begin;  // offsets into centers, plus end sentinel
    for (std::size_t i = 0; i < centers.size(); ++i) {
        if (i == 0 || centers[i].x != centers[i - 1].x) {
            line_xs.push_back(centers[i].x);
            line_begin.push_back(i);
        }
    }
    line_begin.push_back(centers.size());

    const double reach = 1.0 + eps;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const Point& p = points[idx];
        bool hit = false;
        const auto first = std::lower_bound(line_xs.begin(), line_xs.end(), p.x - reach);
        for (auto it = first; it != line_xs.end() && *it <= p.x + reach && !hit; ++it) {
            const std::size_t li = static_cast<std::size_t>(it - line_xs.begin());
            const std::size_t lo = line_begin[li];
            const std::size_t hi = line_begin[li + 1];
            auto above = std::lower_bound(
                centers.begin() + static_cast<std::ptrdiff_t>(lo),
                centers.begin() + static_cast<std::ptrdiff_t>(hi), p.y,
                [](const Point& c, double y) { return c.y < y; });
            if (above != centers.begin() + static_cast<std::ptrdiff_t>(hi) &&
                covers(Disk{*above, solution.norm}, p, eps)) {
                hit = true;
            } else if (above != centers.begin() + static_cast<std::ptrdiff_t>(lo) &&
                       covers(Disk{*std::prev(above), solution.norm}, p, eps)) {
                hit = true;
            }
        }
        if (!hit) {
            return {false, idx, p};
        }
    }
    return {true, std::nullopt, std::nullopt};
}

}  // namespace udc
