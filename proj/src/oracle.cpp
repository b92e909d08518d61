#include "udc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace udc {
namespace {

constexpr double kMergeTol = 1e-9;

std::vector<Point> l2_candidates(std::span<const Point> points) {
    std::vector<Point> cands(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Point& a = points[i];
            const Point& b = points[j];
            const double d = std::hypot(b.x - a.x, b.y - a.y);
            if (d == 0.0 || d > 2.0 + kMergeTol) continue;
            // intersections of the unit circles around a and b; tangent pairs
            // give h = 0 and collapse to the midpoint
            const double h = std::sqrt(std::max(0.0, 1.0 - (d / 2.0) * (d / 2.0)));
            const double ux = (b.x - a.x) / d;
            const double uy = (b.y - a.y) / d;
            const Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
            cands.push_back({mid.x - h * uy, mid.y + h * ux});
            cands.push_back({mid.x + h * uy, mid.y - h * ux});
        }
    }
    return cands;
}

std::vector<Point> linf_candidates(std::span<const Point> points) {
    // canonical squares: left edge on p.x, top edge on q.y
    std::vector<Point> cands;
    cands.reserve(points.size() * points.size());
    for (const Point& p : points) {
        for (const Point& q : points) {
            cands.push_back({p.x + 1.0, q.y - 1.0});
        }
    }
    return cands;
}

void merge_near_duplicates(std::vector<Point>& cands) {
    std::sort(cands.begin(), cands.end(), [](const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    std::vector<Point> merged;
    for (const Point& c : cands) {
        if (!merged.empty() && std::fabs(c.x - merged.back().x) <= kMergeTol &&
            std::fabs(c.y - merged.back().y) <= kMergeTol) {
            continue;
        }
        merged.push_back(c);
    }
    cands = std::move(merged);
}

struct BranchState {
    const std::vector<std::uint64_t>& masks;
    const std::vector<std::vector<std::size_t>>& elem_candidates;  // per element
    const std::vector<std::size_t>& elem_order;  // fewest covering candidates first
    std::size_t max_gain = 1;
    std::vector<std::size_t> best;
    std::vector<std::size_t> chosen;
};

void branch(BranchState& st, std::uint64_t uncovered) {
    if (uncovered == 0) {
        if (st.chosen.size() < st.best.size()) st.best = st.chosen;
        return;
    }
    const std::size_t remaining =
        static_cast<std::size_t>(std::popcount(uncovered));
    const std::size_t lower = (remaining + st.max_gain - 1) / st.max_gain;
    if (st.chosen.size() + lower >= st.best.size()) return;

    // branch on the hardest still-uncovered element
    std::size_t elem = 0;
    for (std::size_t e : st.elem_order) {
        if (uncovered & (std::uint64_t{1} << e)) {
            elem = e;
            break;
        }
    }
    for (std::size_t c : st.elem_candidates[elem]) {
        st.chosen.push_back(c);
        branch(st, uncovered & ~st.masks[c]);
        st.chosen.pop_back();
    }
}

}  // namespace

CandidateSet generate_candidates(const Norm& norm, std::span<const Point> points,
                                 std::size_t limit) {
    if (points.size() > std::min(limit, kOracleHardLimit)) {
        throw std::invalid_argument("oracle instance too large (limit " +
                                    std::to_string(std::min(limit, kOracleHardLimit)) +
                                    " points)");
    }

    std::vector<Point> centers;
    switch (norm.kind) {
        case NormKind::L2:
            centers = l2_candidates(points);
            break;
        case NormKind::Linf:
            centers = linf_candidates(points);
            break;
        case NormKind::Lp:
            throw std::invalid_argument("oracle supports l2 and linf norms only");
    }
    merge_near_duplicates(centers);

    CandidateSet cs;
    cs.norm = norm;
    cs.num_points = points.size();
    for (const Point& c : centers) {
        std::vector<std::size_t> covered;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (covers(Disk{c, norm}, points[i], kMergeTol)) {
                covered.push_back(i);
            }
        }
        if (covered.empty()) continue;
        cs.centers.push_back(c);
        cs.coverage.push_back(std::move(covered));
    }
    return cs;
}

CoverSolution set_cover_exact(const CandidateSet& candidates) {
    CoverSolution solution;
    solution.norm = candidates.norm;
    const std::size_t n = candidates.num_points;
    if (n == 0) return solution;
    if (n > kOracleHardLimit) {
        throw std::invalid_argument("candidate set exceeds the oracle limit");
    }

    const std::size_t m = candidates.centers.size();
    std::vector<std::uint64_t> masks(m, 0);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t e : candidates.coverage[c]) {
            masks[c] |= std::uint64_t{1} << e;
        }
    }
    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    std::vector<std::vector<std::size_t>> elem_candidates(n);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t e : candidates.coverage[c]) {
            elem_candidates[e].push_back(c);
        }
    }
    for (std::size_t e = 0; e < n; ++e) {
        if (elem_candidates[e].empty()) {
            throw std::invalid_argument("candidate set leaves a point uncoverable");
        }
        // try big candidates first; index breaks ties for determinism
        std::sort(elem_candidates[e].begin(), elem_candidates[e].end(),
                  [&](std::size_t a, std::size_t b) {
                      const auto pa = std::popcount(masks[a]);
                      const auto pb = std::popcount(masks[b]);
                      return pa != pb ? pa > pb : a < b;
                  });
    }
    std::vector<std::size_t> elem_order(n);
    for (std::size_t e = 0; e < n; ++e) elem_order[e] = e;
    std::stable_sort(elem_order.begin(), elem_order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return elem_candidates[a].size() < elem_candidates[b].size();
                     });

    std::size_t max_gain = 1;
    for (std::size_t c = 0; c < m; ++c) {
        max_gain = std::max(max_gain, static_cast<std::size_t>(std::popcount(masks[c])));
    }

    // greedy upper bound seeds the search
    std::vector<std::size_t> greedy;
    std::uint64_t uncovered = full;
    while (uncovered != 0) {
        std::size_t pick = 0;
        int pick_gain = -1;
        for (std::size_t c = 0; c < m; ++c) {
            const int gain = std::popcount(masks[c] & uncovered);
            if (gain > pick_gain) {
                pick = c;
                pick_gain = gain;
            }
        }
        greedy.push_back(pick);
        uncovered &= ~masks[pick];
    }

    BranchState st{masks, elem_candidates, elem_order, max_gain, std::move(greedy), {}};
    branch(st, full);

    std::sort(st.best.begin(), st.best.end());
    for (std::size_t c : st.best) {
        solution.disks.push_back(Disk{candidates.centers[c], candidates.norm});
    }
    return solution;
}

std::size_t min_stabbing_bruteforce(std::span<const Segment> segments,
                                    std::size_t limit) {
    if (segments.size() > std::min(limit, std::size_t{20})) {
        throw std::invalid_argument("brute-force stabbing limited to " +
                                    std::to_string(std::min(limit, std::size_t{20})) +
                                    " segments");
    }
    if (segments.empty()) return 0;
    for (const Segment& s : segments) {
        if (!(s.lo <= s.hi)) throw std::invalid_argument("segment with lo > hi");
    }

    const std::size_t m = segments.size();
    // stab sets drawn from lower endpoints: sliding any stab down to the
    // highest lower endpoint at or below it preserves what it stabs
    std::vector<std::uint32_t> stabbed_by(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            if (segments[i].lo <= segments[j].lo && segments[j].lo <= segments[i].hi) {
                stabbed_by[j] |= std::uint32_t{1} << i;
            }
        }
    }
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::size_t best = m;
    for (std::uint32_t subset = 0; subset <= full; ++subset) {
        if (static_cast<std::size_t>(std::popcount(subset)) >= best) continue;
        std::uint32_t hit = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (subset & (std::uint32_t{1} << j)) hit |= stabbed_by[j];
        }
        if (hit == full) best = static_cast<std::size_t>(std::popcount(subset));
    }
    return best;
}

}  // namespace udc
