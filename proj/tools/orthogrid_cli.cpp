// orthogrid: campaigns, renders and verification from the command line.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orthogrid/clique_grid.hpp"
#include "orthogrid/embed.hpp"
#include "orthogrid/experiments.hpp"
#include "orthogrid/geo.hpp"
#include "orthogrid/io.hpp"

namespace fs = std::filesystem;
using namespace orthogrid;

namespace {

constexpr const char *kOutputDirEnv = "ORTHOGRID_OUTPUT_DIR";

struct Output {
    std::string dir = ".";

    fs::path resolve(const std::string &name) const {
        fs::path p(name);
        if (p.is_absolute())
            return p;
        if (const char *env = std::getenv(kOutputDirEnv); env && *env)
            return fs::path(env) / p;
        return fs::path(dir) / p;
    }

    // "-" or empty writes to stdout.
    template <typename Fn>
    void write(const std::string &name, Fn &&fn) const {
        if (name.empty() || name == "-") {
            fn(std::cout);
            return;
        }
        const fs::path path = resolve(name);
        if (path.has_parent_path())
            fs::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open " + path.string() + " for writing");
        fn(out);
        if (!out)
            throw std::runtime_error("write failed: " + path.string());
        std::cerr << "wrote " << path.string() << '\n';
    }
};

ReportFormat parse_format(const std::string &s) { return s == "json" ? ReportFormat::Json : ReportFormat::Csv; }

std::ifstream open_input(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

class Timer {
  public:
    explicit Timer(std::string label) : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::cerr << label_ << ": " << secs << "s\n";
    }

  private:
    std::string label_;
    std::chrono::steady_clock::time_point start_;
};

OptimalInstance parse_instance(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4)
        throw CLI::ValidationError("--instance", "expected m,t,c or m,t,c,d, got '" + text + "'");
    OptimalInstance inst;
    try {
        inst.m = std::stoul(parts[0]);
        inst.t = std::stoul(parts[1]);
        inst.c = std::stod(parts[2]);
        if (parts.size() == 4)
            inst.d = std::stoul(parts[3]);
    } catch (const std::exception &) {
        throw CLI::ValidationError("--instance", "bad number in '" + text + "'");
    }
    return inst;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Orthogonal colourings of clique grids and random geometric graphs"};
    app.set_config("--config", "", "TOML/INI config file; sections name subcommands");
    app.require_subcommand(1);
    app.fallthrough();

    Output output;
    app.add_option("--output-dir", output.dir,
                   std::string("Directory for relative output paths (overridden by ") + kOutputDirEnv + ")");

    // theorem1-suite
    auto *suite_cmd = app.add_subcommand("theorem1-suite", "Verify the H(m,d,t) constructions over a parameter box");
    std::size_t max_m = 6, max_d = 2, max_t = 2, oracle_max = 12;
    std::string suite_format = "csv", suite_out = "-";
    suite_cmd->add_option("--max-m", max_m)->check(CLI::PositiveNumber);
    suite_cmd->add_option("--max-d", max_d)->check(CLI::PositiveNumber);
    suite_cmd->add_option("--max-t", max_t)->check(CLI::PositiveNumber);
    suite_cmd->add_option("--oracle-max-vertices", oracle_max, "Run the exact oracle when mt is at most this");
    suite_cmd->add_option("--format", suite_format)->check(CLI::IsMember({"csv", "json"}));
    suite_cmd->add_option("-o,--out", suite_out, "Output file, '-' for stdout");

    // dense
    auto *dense_cmd = app.add_subcommand("dense", "Dense-regime Monte Carlo campaign");
    DenseConfig dense_cfg;
    dense_cfg.n_values = {1000, 10000};
    std::string dense_format = "csv", dense_out = "-";
    bool dense_timing = false;
    dense_cmd->add_option("-n,--n", dense_cfg.n_values, "Vertex counts (repeatable)")->check(CLI::PositiveNumber);
    dense_cmd->add_option("--alpha", dense_cfg.alpha)->check(CLI::Range(0.0, 0.25));
    dense_cmd->add_option("--trials", dense_cfg.trials)->check(CLI::PositiveNumber);
    dense_cmd->add_option("--seed", dense_cfg.base_seed);
    dense_cmd->add_option("--threads", dense_cfg.threads, "0 picks the hardware concurrency");
    dense_cmd->add_option("--format", dense_format)->check(CLI::IsMember({"csv", "json"}));
    dense_cmd->add_option("-o,--out", dense_out);
    dense_cmd->add_flag("--timing", dense_timing, "Add wall_seconds to the report (breaks byte-identical replays)");

    // optimal
    auto *optimal_cmd = app.add_subcommand("optimal", "Equal-count partition campaign with n = m^2 t^2");
    OptimalConfig optimal_cfg;
    std::vector<std::string> instance_specs = {"20,5,0.9"};
    std::string optimal_format = "csv", optimal_out = "-";
    bool optimal_timing = false;
    optimal_cmd->add_option("--instance", instance_specs, "m,t,c[,d] with r = c n^(-1/4) (repeatable)");
    optimal_cmd->add_option("--trials", optimal_cfg.trials)->check(CLI::PositiveNumber);
    optimal_cmd->add_option("--seed", optimal_cfg.base_seed);
    optimal_cmd->add_option("--threads", optimal_cfg.threads);
    optimal_cmd->add_option("--format", optimal_format)->check(CLI::IsMember({"csv", "json"}));
    optimal_cmd->add_option("-o,--out", optimal_out);
    optimal_cmd->add_flag("--timing", optimal_timing);

    // render
    auto *render_cmd = app.add_subcommand("render", "Sample, colour and draw one instance");
    std::string regime = "dense", points_in, prefix = "instance";
    std::size_t render_n = 500, render_m = 9, render_t = 1;
    double render_alpha = 0.25, render_c = 0.9, svg_size = 800.0;
    std::optional<std::size_t> render_d;
    std::uint64_t render_seed = 1;
    render_cmd->add_option("--regime", regime)->check(CLI::IsMember({"dense", "optimal"}));
    render_cmd->add_option("-n,--n", render_n, "Dense regime vertex count")->check(CLI::PositiveNumber);
    render_cmd->add_option("--alpha", render_alpha)->check(CLI::Range(0.0, 0.25));
    render_cmd->add_option("--m", render_m, "Optimal regime cells per side")->check(CLI::PositiveNumber);
    render_cmd->add_option("--t", render_t)->check(CLI::PositiveNumber);
    render_cmd->add_option("--c", render_c, "Optimal regime radius constant")->check(CLI::PositiveNumber);
    render_cmd->add_option("--d", render_d, "Override the derived reach d");
    render_cmd->add_option("--seed", render_seed);
    render_cmd->add_option("--points", points_in, "Read points from a CSV instead of sampling")
        ->check(CLI::ExistingFile);
    render_cmd->add_option("--prefix", prefix, "Basename for the .svg/.json/.csv/.edges outputs");
    render_cmd->add_option("--size", svg_size)->check(CLI::PositiveNumber);

    // verify
    auto *verify_cmd = app.add_subcommand("verify", "Check a colouring pair against a graph");
    std::string graph_in, colouring_in;
    verify_cmd->add_option("--graph", graph_in, "Edge-list file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--colouring", colouring_in, "ColouringPair JSON")->required()->check(CLI::ExistingFile);

    // grid
    auto *grid_cmd = app.add_subcommand("grid", "Export H(m,d,t) or L(m^2,d,t^2) with its colouring");
    HParams grid_p{9, 1, 2};
    bool grid_l = false;
    std::string grid_prefix;
    grid_cmd->add_option("--m", grid_p.m)->check(CLI::PositiveNumber);
    grid_cmd->add_option("--d", grid_p.d)->check(CLI::PositiveNumber);
    grid_cmd->add_option("--t", grid_p.t)->check(CLI::PositiveNumber);
    grid_cmd->add_flag("--lattice", grid_l, "Build the clique grid L instead of H");
    grid_cmd->add_option("--prefix", grid_prefix, "Basename for .edges and .colouring.json (default derived)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*suite_cmd) {
            Timer timer("theorem1-suite");
            const TheoremOneSuite suite = run_theorem_one_suite(max_m, max_d, max_t, oracle_max);
            output.write(suite_out, [&](std::ostream &out) { emit_report(out, suite, parse_format(suite_format)); });
            std::cerr << suite.rows.size() << " instances, " << suite.oracle_checked() << " oracle-checked, "
                      << suite.degenerate_rows().size() << " degenerate\n";
            return suite.all_pass() ? 0 : 1;
        }
        if (*dense_cmd) {
            Timer timer("dense");
            const DenseReport report = run_dense_campaign(dense_cfg);
            output.write(dense_out,
                         [&](std::ostream &out) { emit_report(out, report, parse_format(dense_format), dense_timing); });
            return 0;
        }
        if (*optimal_cmd) {
            Timer timer("optimal");
            for (const std::string &item : instance_specs)
                optimal_cfg.instances.push_back(parse_instance(item));
            const OptimalReport report = run_optimal_campaign(optimal_cfg);
            output.write(optimal_out, [&](std::ostream &out) {
                emit_report(out, report, parse_format(optimal_format), optimal_timing);
            });
            return 0;
        }
        if (*render_cmd) {
            Timer timer("render");
            std::optional<PointSet> loaded;
            if (!points_in.empty()) {
                std::ifstream in = open_input(points_in);
                loaded = io::read_points_csv(in);
            }
            RggSample sample;
            ColouredRGG rgg;
            if (regime == "dense") {
                const std::size_t n = loaded ? loaded->size() : render_n;
                const DenseParams dp = derive_dense_params(n, render_alpha);
                sample = loaded ? rgg_from_points(loaded->points, dp.r, loaded->seed) : sample_rgg(n, dp.r, render_seed);
                rgg = colour_rgg_dense(sample, dp);
            } else {
                const std::size_t n = render_m * render_m * render_t * render_t;
                if (loaded && loaded->size() != n)
                    throw std::invalid_argument("render: point count must equal m^2 t^2");
                const double r = render_c * std::pow(static_cast<double>(n), -0.25);
                OptimalParams op = derive_optimal_params(render_m, render_t, r);
                if (render_d)
                    op.d = *render_d;
                sample = loaded ? rgg_from_points(loaded->points, r, loaded->seed) : sample_rgg(n, r, render_seed);
                rgg = colour_rgg_optimal(sample, op);
            }
            output.write(prefix + ".svg",
                         [&](std::ostream &out) { io::write_svg(out, sample.points, sample.graph, rgg.pair, svg_size); });
            output.write(prefix + ".json", [&](std::ostream &out) { out << io::to_json(rgg).dump(2) << '\n'; });
            output.write(prefix + ".csv", [&](std::ostream &out) { io::write_points_csv(out, sample.points); });
            output.write(prefix + ".edges", [&](std::ostream &out) { io::write_edge_list(out, sample.graph); });
            if (rgg.pair)
                output.write(prefix + ".colouring.json",
                             [&](std::ostream &out) { out << io::to_json(*rgg.pair).dump() << '\n'; });
            std::cerr << "failure: " << to_string(rgg.failure) << ", palette " << rgg.palette_size << '\n';
            return rgg.success() ? 0 : 2;
        }
        if (*verify_cmd) {
            std::ifstream gin = open_input(graph_in);
            const Graph g = io::read_edge_list(gin);
            std::ifstream cin_ = open_input(colouring_in);
            io::json j;
            try {
                j = io::json::parse(cin_);
            } catch (const io::json::parse_error &e) {
                throw std::runtime_error(colouring_in + ": " + e.what());
            }
            const VerificationReport report = verify(g, io::colouring_from_json(j));
            std::cout << io::to_json(report).dump(2) << '\n';
            return report.ok() ? 0 : 1;
        }
        if (*grid_cmd) {
            const Graph g = grid_l ? build_L(grid_p) : build_H(grid_p);
            const ColouringPair pair = grid_l ? colour_L(grid_p) : colour_H(grid_p);
            std::string base = grid_prefix;
            if (base.empty())
                base = std::string(grid_l ? "L" : "H") + "_" + std::to_string(grid_p.m) + "_" +
                       std::to_string(grid_p.d) + "_" + std::to_string(grid_p.t);
            output.write(base + ".edges", [&](std::ostream &out) { io::write_edge_list(out, g); });
            output.write(base + ".colouring.json", [&](std::ostream &out) { out << io::to_json(pair).dump() << '\n'; });
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "orthogrid: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
