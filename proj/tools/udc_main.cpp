// Command-line front end: solve / oracle / gen / bench subcommands.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "udc/io.hpp"
#include "udc/oracle.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// All computation happens before any write; the temp-then-rename keeps a
// failed run from leaving partial output behind.
void write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open output file '" + path + "'");
        }
        out << content;
        if (!out.good()) {
            std::remove(tmp.c_str());
            throw std::runtime_error("failed writing output file '" + path + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::remove(tmp.c_str());
        throw std::runtime_error("failed to move output into place at '" + path + "'");
    }
}

struct SolveOptions {
    std::string input;
    std::string norm = "l2";
    std::string algo = "smooth";
    std::optional<double> width;
    double shift = 0.0;
    int shifts = 6;
    double eps = udc::kDefaultEps;
    std::string output;
    std::string svg;
};

int run_solve(const SolveOptions& opt) {
    const udc::Norm norm = udc::parse_norm(opt.norm);
    const auto points = udc::parse_points(read_file(opt.input));

    udc::AlgorithmReport report;
    if (opt.algo == "linf") {
        if (norm.kind != udc::NormKind::Linf) {
            throw std::runtime_error("--algo linf requires --norm linf");
        }
        report = udc::solve_linf(
            points, udc::StripConfig(opt.width.value_or(2.0), opt.shift));
    } else if (opt.algo == "single") {
        report = udc::solve_single_shift(
            norm, points,
            udc::StripConfig(opt.width.value_or(udc::default_width(norm)), opt.shift));
    } else if (opt.algo == "smooth") {
        report = udc::solve_smoothed(norm, points, opt.shifts, opt.width, opt.shift);
    } else {
        throw std::runtime_error("unknown --algo '" + opt.algo +
                                 "' (expected single, smooth or linf)");
    }

    const auto check = udc::verify_cover(report.solution, points, opt.eps);
    if (!check.covered) {
        throw std::runtime_error(
            "internal error: solution fails verification at point index " +
            std::to_string(*check.witness_index));
    }

    const std::string json = udc::emit_json(report);
    const std::string svg = opt.svg.empty() ? "" : udc::emit_svg(report, points);
    write_file(opt.output, json);
    if (!opt.svg.empty()) {
        write_file(opt.svg, svg);
    }
    return 0;
}

struct OracleOptions {
    std::string input;
    std::string norm = "l2";
    std::size_t limit = udc::kOracleDefaultLimit;
    std::string output;
};

int run_oracle(const OracleOptions& opt) {
    const udc::Norm norm = udc::parse_norm(opt.norm);
    const auto points = udc::parse_points(read_file(opt.input));
    const auto solution = udc::set_cover_exact(
        udc::generate_candidates(norm, points, opt.limit));

    const auto check = udc::verify_cover(solution, points, udc::kDefaultEps);
    if (!check.covered) {
        throw std::runtime_error("internal error: oracle output fails verification");
    }
    write_file(opt.output, udc::emit_json(solution));
    return 0;
}

struct GenOptions {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<double> box = {0.0, 0.0, 20.0, 20.0};
    std::string centers_file;
    std::size_t clusters = 1;
    std::string output;
};

int run_gen(const GenOptions& opt) {
    if (opt.box.size() != 4) {
        throw std::runtime_error("--box expects X0,Y0,X1,Y1");
    }
    const udc::Box box{opt.box[0], opt.box[1], opt.box[2], opt.box[3]};

    std::vector<udc::Point> points;
    std::string comment;
    if (opt.kind == "uniform") {
        points = udc::gen_uniform(opt.n, box, opt.seed);
        comment = "udc gen uniform n=" + std::to_string(opt.n) +
                  " seed=" + std::to_string(opt.seed);
    } else if (opt.kind == "clusters") {
        std::vector<udc::Point> centers;
        if (!opt.centers_file.empty()) {
            centers = udc::parse_points(read_file(opt.centers_file));
        } else {
            // centers drawn first from the same seed, then the points
            centers = udc::gen_uniform(opt.clusters, box, opt.seed);
        }
        points = udc::gen_clusters(opt.n, centers, opt.seed + 1);
        comment = "udc gen clusters n=" + std::to_string(opt.n) +
                  " k=" + std::to_string(centers.size()) +
                  " seed=" + std::to_string(opt.seed);
    } else {
        throw std::runtime_error("unknown kind '" + opt.kind +
                                 "' (expected uniform or clusters)");
    }
    write_file(opt.output, udc::emit_points(points, comment));
    return 0;
}

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::string algo = "smooth";
    std::string norm = "l2";
    int repeats = 1;
    std::uint64_t seed = 0;
};

int run_bench_cmd(const BenchOptions& opt) {
    const auto records =
        udc::run_bench(opt.sizes, opt.algo, udc::parse_norm(opt.norm), opt.repeats,
                       opt.seed);
    std::cout << udc::bench_csv(records);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit disk cover via line-restricted strips"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    auto* solve = app.add_subcommand("solve", "cover the points of an instance file");
    solve->add_option("--input", solve_opt.input, "instance file")->required();
    solve->add_option("--norm", solve_opt.norm, "l2, linf or lp:P")->required();
    solve->add_option("--algo", solve_opt.algo, "single, smooth or linf");
    solve->add_option("--width", solve_opt.width, "strip width (default per norm)");
    solve->add_option("--shift", solve_opt.shift, "boundary offset");
    solve->add_option("--shifts", solve_opt.shifts, "number of smoothing shifts")
        ->check(CLI::PositiveNumber);
    solve->add_option("--eps", solve_opt.eps, "coverage tolerance")
        ->check(CLI::NonNegativeNumber);
    solve->add_option("--output", solve_opt.output, "solution JSON path")->required();
    solve->add_option("--svg", solve_opt.svg, "optional SVG rendering path");

    OracleOptions oracle_opt;
    auto* oracle = app.add_subcommand("oracle", "exact optimum for small instances");
    oracle->add_option("--input", oracle_opt.input, "instance file")->required();
    oracle->add_option("--norm", oracle_opt.norm, "l2 or linf")->required();
    oracle->add_option("--limit", oracle_opt.limit, "max instance size");
    oracle->add_option("--output", oracle_opt.output, "solution JSON path")->required();

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    gen->add_option("kind", gen_opt.kind, "uniform or clusters")->required();
    gen->add_option("--n", gen_opt.n, "number of points")->required();
    gen->add_option("--seed", gen_opt.seed, "PRNG seed")->required();
    gen->add_option("--box", gen_opt.box, "X0,Y0,X1,Y1 sampling box")
        ->delimiter(',')
        ->expected(4);
    gen->add_option("--centers", gen_opt.centers_file, "cluster centers file");
    gen->add_option("--k", gen_opt.clusters, "random cluster count")
        ->check(CLI::PositiveNumber);
    gen->add_option("--output", gen_opt.output, "instance file path")->required();

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "time the solvers, CSV on stdout");
    bench->add_option("--sizes", bench_opt.sizes, "instance sizes, ascending")
        ->delimiter(',')
        ->required();
    bench->add_option("--algo", bench_opt.algo, "single, smooth or linf");
    bench->add_option("--norm", bench_opt.norm, "l2, linf or lp:P")->required();
    bench->add_option("--repeats", bench_opt.repeats, "repeats per size")
        ->check(CLI::PositiveNumber)
        ->required();
    bench->add_option("--seed", bench_opt.seed, "PRNG seed")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (oracle->parsed()) return run_oracle(oracle_opt);
        if (gen->parsed()) return run_gen(gen_opt);
        if (bench->parsed()) return run_bench_cmd(bench_opt);
    } catch (const std::exception& e) {
        std::cerr << "udc: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
