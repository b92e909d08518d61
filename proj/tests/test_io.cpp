#include "udc/io.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"

using namespace udc;

TEST_CASE("parse_points accepts whitespace or comma separators") {
    const auto pts = parse_points("1 2\n3,4\n");
    CHECK(pts == std::vector<Point>{{1.0, 2.0}, {3.0, 4.0}});

    const auto with_comments = parse_points("# header\n\n0 0\n");
    CHECK(with_comments == std::vector<Point>{{0.0, 0.0}});

    CHECK(parse_points("").empty());
    CHECK(parse_points("  # only a comment").empty());
}

TEST_CASE("parse_points reports the offending line") {
    CHECK_THROWS_WITH_AS(parse_points("1 nan\n"),
                         doctest::Contains("line 1"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_points("0 0\n1 2 3\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_points("0 0\n\nx y\n"),
                         doctest::Contains("line 3"), std::runtime_error);
    CHECK_THROWS_AS(parse_points("5\n"), std::runtime_error);
    CHECK_THROWS_AS(parse_points("1 inf\n"), std::runtime_error);
}

TEST_CASE("parse_norm round-trips the label") {
    CHECK(parse_norm("l2") == Norm::l2());
    CHECK(parse_norm("linf") == Norm::linf());
    CHECK(parse_norm("lp:3") == Norm::lp(3.0));
    CHECK(parse_norm(Norm::lp(1.5).label()) == Norm::lp(1.5));
    CHECK_THROWS_AS(parse_norm("l3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_norm("lp:0.2"), std::invalid_argument);
}

TEST_CASE("gen_uniform is deterministic and respects the box") {
    CHECK(gen_uniform(0, Box{0, 0, 1, 1}, 5).empty());

    const Box box{-2.0, 3.0, 4.0, 8.0};
    const auto a = gen_uniform(500, box, 123);
    const auto b = gen_uniform(500, box, 123);
    CHECK(a == b);
    CHECK(a != gen_uniform(500, box, 124));
    for (const Point& p : a) {
        CHECK(p.x >= box.x0);
        CHECK(p.x < box.x1);
        CHECK(p.y >= box.y0);
        CHECK(p.y < box.y1);
    }
}

TEST_CASE("gen_clusters keeps every point inside its disk") {
    const std::vector<Point> centers = {{0.1, 0.0}};
    const auto pts = gen_clusters(500, centers, 7);
    REQUIRE(pts.size() == 500);
    for (const Point& p : pts) {
        CHECK(distance(Norm::l2(), p, centers[0]) <= 1.0);
    }

    // the adversarial single-cluster instance stays within the oblivious bound
    const auto report =
        solve_single_shift(Norm::l2(), pts,
                           StripConfig(std::sqrt(3.0), -std::sqrt(3.0) / 2.0));
    CHECK(report.solution.count() <= 5);
    CHECK(verify_cover(report.solution, pts, 1e-9).covered);

    CHECK_THROWS_AS(gen_clusters(10, {}, 1), std::invalid_argument);
}

TEST_CASE("emit_json fixes the key order and formats") {
    AlgorithmReport empty;
    empty.solution.norm = Norm::l2();
    empty.solution.strip_config = StripConfig(std::sqrt(3.0), 0.0);
    empty.per_shift_counts = {{0.0, 0}};
    const std::string text = emit_json(empty);
    CHECK(text.find("\"count\":0") != std::string::npos);
    CHECK(text.find("\"disks\":[]") != std::string::npos);
    CHECK(text.find("\"norm\":\"l2\"") < text.find("\"width\""));
    CHECK(text.find("\"width\"") < text.find("\"shift\""));
    CHECK(text.find("\"shift\"") < text.find("\"count\""));
    CHECK(text.find("\"count\"") < text.find("\"disks\""));
    CHECK(text.find("\"disks\"") < text.find("\"per_shift_counts\""));

    AlgorithmReport one;
    one.solution.norm = Norm::linf();
    one.solution.disks = {Disk{{1.0, 0.0}, Norm::linf()}};
    one.per_shift_counts = {{0.0, 1}};
    CHECK(emit_json(one).find("\"disks\":[{\"x\":1,\"y\":0}]") != std::string::npos);
}

TEST_CASE("emit_json round-trips bit-exactly") {
    std::mt19937_64 gen(51);
    std::uniform_real_distribution<double> coord(0.0, 9.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> pts(1 + gen() % 40);
        for (Point& p : pts) p = {coord(gen), coord(gen)};
        const auto report = solve_smoothed(Norm::l2(), pts);

        const auto parsed = nlohmann::json::parse(emit_json(report));
        CHECK(parsed.at("norm").get<std::string>() == report.solution.norm.label());
        CHECK(parsed.at("width").get<double>() ==
              report.solution.strip_config->width);
        CHECK(parsed.at("shift").get<double>() == report.chosen_shift);
        CHECK(parsed.at("count").get<std::size_t>() == report.solution.count());
        REQUIRE(parsed.at("disks").size() == report.solution.disks.size());
        for (std::size_t i = 0; i < report.solution.disks.size(); ++i) {
            CHECK(parsed["disks"][i]["x"].get<double>() ==
                  report.solution.disks[i].center.x);
            CHECK(parsed["disks"][i]["y"].get<double>() ==
                  report.solution.disks[i].center.y);
        }
        REQUIRE(parsed.at("per_shift_counts").size() == report.per_shift_counts.size());
        for (std::size_t j = 0; j < report.per_shift_counts.size(); ++j) {
            CHECK(parsed["per_shift_counts"][j][0].get<double>() ==
                  report.per_shift_counts[j].shift);
            CHECK(parsed["per_shift_counts"][j][1].get<std::size_t>() ==
                  report.per_shift_counts[j].count);
        }
    }
}

TEST_CASE("format_double survives strtod round-trips") {
    std::mt19937_64 gen(52);
    std::uniform_real_distribution<double> wide(-1e6, 1e6);
    for (int trial = 0; trial < 1000; ++trial) {
        const double v = wide(gen);
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("emit_points round-trips through parse_points") {
    const auto pts = gen_uniform(64, Box{0, 0, 20, 20}, 9);
    CHECK(parse_points(emit_points(pts, "test instance")) == pts);
}

TEST_CASE("emit_svg draws the filled-disk-on-boundary figure") {
    const double root3 = std::sqrt(3.0);
    const auto pts = test::disk_fill({root3 / 2.0, 0.0});
    const auto report =
        solve_single_shift(Norm::l2(), pts, StripConfig(root3, -root3 / 2.0));
    REQUIRE(report.solution.count() == 4);

    const std::string svg = emit_svg(report, pts);
    CHECK(test::xml_well_formed(svg));
    CHECK(test::count_occurrences(svg, "class=\"disk\"") == 4);
    CHECK(test::count_occurrences(svg, "class=\"restriction-line\"") == 2);
    CHECK(test::count_occurrences(svg, "stroke-dasharray") == 2);
}

TEST_CASE("emit_svg on an empty instance is well-formed and glyph-free") {
    AlgorithmReport report;
    report.solution.norm = Norm::l2();
    report.solution.strip_config = StripConfig(std::sqrt(3.0), 0.0);
    const std::string svg = emit_svg(report, {});
    CHECK(test::xml_well_formed(svg));
    CHECK(test::count_occurrences(svg, "class=\"disk\"") == 0);
    CHECK(test::count_occurrences(svg, "class=\"pt\"") == 0);
}

TEST_CASE("emit_svg uses squares for the max norm and a note for lp") {
    AlgorithmReport report;
    report.solution.norm = Norm::linf();
    report.solution.strip_config = StripConfig(2.0, 0.0);
    report.solution.disks = {Disk{{1.0, 0.0}, Norm::linf()}};
    const std::string squares = emit_svg(report, {{{1.0, 0.5}}});
    CHECK(test::xml_well_formed(squares));
    CHECK(test::count_occurrences(squares, "<rect class=\"disk\"") == 1);

    report.solution.norm = Norm::lp(3.0);
    report.solution.disks = {Disk{{1.0, 0.0}, Norm::lp(3.0)}};
    const std::string lp = emit_svg(report, {{{1.0, 0.5}}});
    CHECK(test::xml_well_formed(lp));
    CHECK(test::count_occurrences(lp, "<circle class=\"disk\"") == 1);
    CHECK(lp.find("balls drawn as L2 circles") != std::string::npos);
}

TEST_CASE("run_bench produces deterministic counts") {
    const std::vector<std::size_t> sizes = {1000};
    const auto a = run_bench(sizes, "smooth", Norm::l2(), 1, 77);
    REQUIRE(a.size() == 1);
    CHECK(a[0].n == 1000);
    CHECK(a[0].disk_count > 0);

    const auto b = run_bench(sizes, "smooth", Norm::l2(), 1, 77);
    CHECK(a[0].disk_count == b[0].disk_count);
    CHECK(a[0].seed == b[0].seed);

    const auto csv = bench_csv(a);
    CHECK(csv.rfind("n,algorithm,norm,seed,count,millis\n", 0) == 0);
    CHECK(test::count_occurrences(csv, "\n") == 2);

    const std::vector<std::size_t> unsorted = {2000, 1000};
    CHECK_THROWS_AS(run_bench(unsorted, "smooth", Norm::l2(), 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_bench(sizes, "nope", Norm::l2(), 1, 1),
                    std::invalid_argument);
}
