#include "udc/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace udc {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

double parse_coord(std::string_view token, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected a number, got '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": non-finite coordinate '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Point Rng::in_box(const Box& box) {
    const double x = uniform(box.x0, box.x1);
    const double y = uniform(box.y0, box.y1);
    return {x, y};
}

Point Rng::in_unit_disk(const Point& center) {
    const double r = std::sqrt(next_unit());
    const double angle = 2.0 * std::numbers::pi * next_unit();
    return {center.x + r * std::cos(angle), center.y + r * std::sin(angle)};
}

std::vector<Point> parse_points(std::string_view text) {
    std::vector<Point> points;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (is_blank(line)) continue;
        const std::size_t start = line.find_first_not_of(" \t");
        if (line[start] == '#') continue;

        // tokens separated by whitespace and/or a comma
        std::vector<std::string_view> tokens;
        std::size_t i = start;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ','))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != ',')
                ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.size() != 2) {
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'x y', got " +
                                     std::to_string(tokens.size()) + " values");
        }
        const double x = parse_coord(tokens[0], line_no);
        const double y = parse_coord(tokens[1], line_no);
        points.push_back({x, y});
    }
    return points;
}

Norm parse_norm(const std::string& text) {
    if (text == "l2") return Norm::l2();
    if (text == "linf") return Norm::linf();
    if (text.rfind("lp:", 0) == 0) {
        const std::string_view body{text.data() + 3, text.size() - 3};
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc{} && ptr == body.data() + body.size()) {
            return Norm::lp(p);
        }
    }
    throw std::invalid_argument("unknown norm '" + text + "' (expected l2, linf or lp:P)");
}

std::vector<Point> gen_uniform(std::size_t n, const Box& box, std::uint64_t seed) {
    if (!(box.x0 <= box.x1) || !(box.y0 <= box.y1)) {
        throw std::invalid_argument("degenerate box: x0 <= x1 and y0 <= y1 required");
    }
    Rng rng(seed);
    std::vector<Point> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) points.push_back(rng.in_box(box));
    return points;
}

std::vector<Point> gen_clusters(std::size_t n, std::span<const Point> centers,
                                std::uint64_t seed) {
    if (centers.empty()) {
        throw std::invalid_argument("clusters instance needs at least one center");
    }
    Rng rng(seed);
    std::vector<Point> points;
    points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        points.push_back(rng.in_unit_disk(centers[i % centers.size()]));
    }
    return points;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string emit_points(std::span<const Point> points, const std::string& comment) {
    std::string out;
    if (!comment.empty()) {
        out += "# " + comment + "\n";
    }
    for (const Point& p : points) {
        out += format_double(p.x);
        out += ' ';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

namespace {

void append_disks(std::string& out, std::span<const Disk> disks) {
    out += "\"disks\":[";
    for (std::size_t i = 0; i < disks.size(); ++i) {
        if (i) out += ',';
        out += "{\"x\":" + format_double(disks[i].center.x) +
               ",\"y\":" + format_double(disks[i].center.y) + "}";
    }
    out += "]";
}

}  // namespace

std::string emit_json(const AlgorithmReport& report) {
    const CoverSolution& sol = report.solution;
    std::string out = "{\"norm\":\"" + sol.norm.label() + "\"";
    if (sol.strip_config) {
        out += ",\"width\":" + format_double(sol.strip_config->width);
    }
    out += ",\"shift\":" + format_double(report.chosen_shift);
    out += ",\"count\":" + std::to_string(sol.count()) + ",";
    append_disks(out, sol.disks);
    out += ",\"per_shift_counts\":[";
    for (std::size_t i = 0; i < report.per_shift_counts.size(); ++i) {
        if (i) out += ',';
        out += "[" + format_double(report.per_shift_counts[i].shift) + "," +
               std::to_string(report.per_shift_counts[i].count) + "]";
    }
    out += "]}\n";
    return out;
}

std::string emit_json(const CoverSolution& solution) {
    std::string out = "{\"norm\":\"" + solution.norm.label() + "\"";
    out += ",\"count\":" + std::to_string(solution.count()) + ",";
    append_disks(out, solution.disks);
    out += "}\n";
    return out;
}

namespace {

constexpr double kSvgScale = 48.0;  // pixels per unit length

std::string fmt_px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string emit_svg(const AlgorithmReport& report, std::span<const Point> points) {
    const CoverSolution& sol = report.solution;

    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    bool seeded = false;
    auto grow = [&](double x, double y, double pad) {
        if (!seeded) {
            min_x = x - pad;
            max_x = x + pad;
            min_y = y - pad;
            max_y = y + pad;
            seeded = true;
            return;
        }
        min_x = std::min(min_x, x - pad);
        max_x = std::max(max_x, x + pad);
        min_y = std::min(min_y, y - pad);
        max_y = std::max(max_y, y + pad);
    };
    for (const Point& p : points) grow(p.x, p.y, 0.0);
    for (const Disk& d : sol.disks) grow(d.center.x, d.center.y, 1.0);
    min_x -= 1.0;
    max_x += 1.0;
    min_y -= 1.0;
    max_y += 1.0;

    const double width_px = (max_x - min_x) * kSvgScale;
    const double height_px = (max_y - min_y) * kSvgScale;
    auto px = [&](double x) { return fmt_px((x - min_x) * kSvgScale); };
    auto py = [&](double y) { return fmt_px((max_y - y) * kSvgScale); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_px(width_px) +
           "\" height=\"" + fmt_px(height_px) + "\" viewBox=\"0 0 " + fmt_px(width_px) +
           " " + fmt_px(height_px) + "\">\n";
    out += "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" + fmt_px(width_px) +
           "\" height=\"" + fmt_px(height_px) + "\" fill=\"white\"/>\n";

    if (sol.strip_config) {
        // only the strips that hold points get drawn, as in the figures
        const StripConfig& cfg = *sol.strip_config;
        std::vector<double> boundaries;
        for (const auto& [k, count] : sol.strip_counts) {
            boundaries.push_back(cfg.boundary_offset + static_cast<double>(k) * cfg.width);
            boundaries.push_back(cfg.boundary_offset +
                                 static_cast<double>(k + 1) * cfg.width);
        }
        std::sort(boundaries.begin(), boundaries.end());
        boundaries.erase(std::unique(boundaries.begin(), boundaries.end()),
                         boundaries.end());
        for (const double bx : boundaries) {
            out += "<line class=\"strip-boundary\" x1=\"" + px(bx) + "\" y1=\"" + py(max_y) +
                   "\" x2=\"" + px(bx) + "\" y2=\"" + py(min_y) +
                   "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
        }
        for (const auto& [k, count] : sol.strip_counts) {
            const double lx = restriction_line_x(cfg, k);
            out += "<line class=\"restriction-line\" x1=\"" + px(lx) + "\" y1=\"" + py(max_y) +
                   "\" x2=\"" + px(lx) + "\" y2=\"" + py(min_y) +
                   "\" stroke=\"#555\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
        }
    }

    for (const Disk& d : sol.disks) {
        if (sol.norm.kind == NormKind::Linf) {
            out += "<rect class=\"disk\" x=\"" + px(d.center.x - 1.0) + "\" y=\"" +
                   py(d.center.y + 1.0) + "\" width=\"" + fmt_px(2.0 * kSvgScale) +
                   "\" height=\"" + fmt_px(2.0 * kSvgScale) +
                   "\" fill=\"#1f77b4\" fill-opacity=\"0.25\" stroke=\"#1f77b4\"/>\n";
        } else {
            out += "<circle class=\"disk\" cx=\"" + px(d.center.x) + "\" cy=\"" +
                   py(d.center.y) + "\" r=\"" + fmt_px(kSvgScale) +
                   "\" fill=\"#1f77b4\" fill-opacity=\"0.25\" stroke=\"#1f77b4\"/>\n";
        }
    }
    for (const Point& p : points) {
        out += "<circle class=\"pt\" cx=\"" + px(p.x) + "\" cy=\"" + py(p.y) +
               "\" r=\"2\" fill=\"#d62728\"/>\n";
    }
    if (sol.norm.kind == NormKind::Lp) {
        out += "<text class=\"note\" x=\"4\" y=\"14\" font-size=\"12\">" + sol.norm.label() +
               " balls drawn as L2 circles of the same center</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::uint64_t bench_instance_seed(std::uint64_t seed, std::size_t n, int repeat) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(n) ^
                                        splitmix64(static_cast<std::uint64_t>(repeat))));
}

std::vector<BenchRecord> run_bench(std::span<const std::size_t> sizes,
                                   const std::string& algo, const Norm& norm,
                                   int repeats, std::uint64_t seed) {
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("bench sizes must be sorted ascending");
    }
    if (repeats < 1) {
        throw std::invalid_argument("bench repeats must be >= 1");
    }

    std::vector<BenchRecord> records;
    for (const std::size_t n : sizes) {
        const double side = std::max(1.0, std::sqrt(static_cast<double>(n)));
        for (int rep = 0; rep < repeats; ++rep) {
            const std::uint64_t inst_seed = bench_instance_seed(seed, n, rep);
            const auto points = gen_uniform(n, Box{0.0, 0.0, side, side}, inst_seed);

            const auto t0 = std::chrono::steady_clock::now();
            AlgorithmReport report;
            if (algo == "smooth") {
                report = solve_smoothed(norm, points);
            } else if (algo == "single") {
                report = solve_single_shift(norm, points,
                                            StripConfig(default_width(norm), 0.0));
            } else if (algo == "linf") {
                if (norm.kind != NormKind::Linf) {
                    throw std::invalid_argument("algo 'linf' requires --norm linf");
                }
                report = solve_linf(points);
            } else {
                throw std::invalid_argument("unknown algorithm '" + algo +
                                            "' (expected single, smooth or linf)");
            }
            const std::chrono::duration<double, std::milli> elapsed =
                std::chrono::steady_clock::now() - t0;

            records.push_back({n, algo, norm, inst_seed,
                               report.solution.count(), elapsed.count()});
        }
    }
    return records;
}

std::string bench_csv(std::span<const BenchRecord> records) {
    std::string out = "n,algorithm,norm,seed,count,millis\n";
    for (const BenchRecord& r : records) {
        char millis[32];
        std::snprintf(millis, sizeof(millis), "%.3f", r.millis);
        out += std::to_string(r.n) + "," + r.algorithm + "," + r.norm.label() + "," +
               std::to_string(r.seed) + "," + std::to_string(r.disk_count) + "," +
               millis + "\n";
    }
    return out;
}

}  // namespace udc
