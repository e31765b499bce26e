#include "orthogrid/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>
#include <variant>

#include "orthogrid/embed.hpp"
#include "orthogrid/geo.hpp"
#include "orthogrid/io.hpp"
#include "orthogrid/oracle.hpp"
#include "orthogrid/rng.hpp"

namespace orthogrid {

namespace {

using nlohmann::json;
using io::format_double;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double rate(std::size_t hits, std::size_t total) {
    return total == 0 ? kNaN : static_cast<double>(hits) / static_cast<double>(total);
}

json number_or_null(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

// Runs fn(i) for i in [0, count) on a small pool. Results must be written to
// per-index slots; the caller folds them in index order afterwards.
template <typename Fn>
void for_each_trial(std::size_t count, std::size_t threads, Fn &&fn) {
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure)
                            failure = std::current_exception();
                        next = count;
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct DenseTrial {
    bool embedded = false;
    bool homomorphism = false;
    bool verified = false;
    std::size_t overflow_cells = 0;
    std::size_t palette = 0;
    std::size_t used = 0;
};

struct OptimalTrial {
    DeviationCheck deviation;
    bool homomorphism = false;
    bool coloured = false;
    bool verified = false;
};

}  // namespace

// --- closed-form suite ---------------------------------------------------------

bool TheoremOneSuite::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const TheoremOneRow &r) { return r.pass; });
}

std::size_t TheoremOneSuite::oracle_checked() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const TheoremOneRow &r) { return r.oracle.has_value(); }));
}

std::vector<TheoremOneRow> TheoremOneSuite::degenerate_rows() const {
    std::vector<TheoremOneRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [](const TheoremOneRow &r) { return r.degenerate && r.oracle; });
    return out;
}

TheoremOneSuite run_theorem_one_suite(std::size_t max_m, std::size_t max_d, std::size_t max_t,
                                      std::size_t oracle_max_vertices) {
    TheoremOneSuite suite;
    for (std::size_t m = 1; m <= max_m; ++m) {
        for (std::size_t d = 1; d <= max_d; ++d) {
            for (std::size_t t = 1; t <= max_t; ++t) {
                TheoremOneRow row;
                row.params = {m, d, t};
                row.which = classify_case(row.params);
                row.formula = ochi_H(row.params);
                const Graph h = build_H(row.params);
                const ColouringPair pair = colour_H(row.params);
                row.palette = pair.palette_size;
                row.report = verify(h, pair);
                row.degenerate = m <= d;
                row.pass = row.report.ok() && row.palette == row.formula;

                if (m * t <= oracle_max_vertices) {
                    row.oracle = brute_force_ochi(h, row.formula, std::max(oracle_max_vertices, m * t));
                    const std::size_t expected = row.degenerate ? m * t : row.formula;
                    row.pass = row.pass && row.oracle == expected;
                }
                suite.rows.push_back(std::move(row));
            }
        }
    }
    return suite;
}

// --- dense campaign --------------------------------------------------------------

double DenseRow::embed_rate() const { return rate(embed_successes, trials); }
double DenseRow::homomorphism_rate() const { return rate(homomorphism_passes, embed_successes); }
double DenseRow::verify_rate() const { return rate(verify_passes, embed_successes); }

double DenseRow::ratio_vs_upper() const {
    return mean_palette / std::pow(static_cast<double>(n), 1.0 - 2.0 * alpha);
}

double DenseRow::ratio_vs_sqrt_n() const { return mean_palette / std::sqrt(static_cast<double>(n)); }

double DenseRow::ratio_vs_chromatic() const {
    return mean_palette / (std::sqrt(3.0) / 2.0 * std::pow(static_cast<double>(n), 1.0 - 2.0 * alpha));
}

DenseReport run_dense_campaign(const DenseConfig &cfg) {
    if (cfg.trials == 0)
        throw std::invalid_argument("dense campaign: trials must be positive");

    DenseReport report;
    report.config = cfg;
    for (std::size_t n : cfg.n_values) {
        const auto start = std::chrono::steady_clock::now();
        const DenseParams dp = derive_dense_params(n, cfg.alpha);

        std::vector<DenseTrial> trials(cfg.trials);
        for_each_trial(cfg.trials, cfg.threads, [&](std::size_t k) {
            const std::uint64_t seed = trial_seed(cfg.base_seed, n, k);
            DenseTrial &trial = trials[k];
            // Overflow depends only on the points, so skip the graph when it occurs.
            PointSet ps{sample_points(n, seed), dp.r, seed};
            const DenseEmbedding probe = embed_dense(ps, dp);
            if (const auto *overflow = std::get_if<CellOverflow>(&probe)) {
                trial.overflow_cells = overflow->cells.size();
                return;
            }
            Graph g = threshold_graph(ps.points, dp.r);
            const ColouredRGG out = colour_rgg_dense(RggSample{std::move(ps), std::move(g)}, dp);
            trial.embedded = out.failure != FailureKind::CellOverflow;
            trial.overflow_cells = out.overflow.size();
            trial.homomorphism = out.homomorphism_ok;
            if (out.pair) {
                trial.verified = out.report && out.report->ok();
                trial.palette = out.palette_size;
                trial.used = colours_used(*out.pair);
            }
        });

        DenseRow row;
        row.n = n;
        row.alpha = cfg.alpha;
        row.r = dp.r;
        row.m = dp.m;
        row.t = dp.t;
        row.d = dp.d;
        row.base_seed = cfg.base_seed;
        row.trials = cfg.trials;
        row.palette_bound = (dp.t * (dp.d + 1) + 1) * (dp.t * (dp.d + 1) + 1);
        row.lower_bound = clique_number_lower_bound(n);

        std::size_t overflow_total = 0;
        double palette_sum = 0.0;
        double used_sum = 0.0;
        std::size_t coloured = 0;
        for (const DenseTrial &trial : trials) {
            overflow_total += trial.overflow_cells;
            if (!trial.embedded)
                continue;
            ++row.embed_successes;
            row.homomorphism_passes += trial.homomorphism;
            row.verify_passes += trial.verified;
            if (trial.palette == 0)
                continue;
            ++coloured;
            palette_sum += static_cast<double>(trial.palette);
            used_sum += static_cast<double>(trial.used);
            row.max_palette = std::max(row.max_palette, trial.palette);
            row.palette_bound_violations += trial.palette > row.palette_bound;
            row.lower_bound_violations += trial.palette < row.lower_bound;
        }
        row.mean_overflow_cells = static_cast<double>(overflow_total) / static_cast<double>(cfg.trials);
        row.mean_palette = coloured ? palette_sum / static_cast<double>(coloured) : kNaN;
        row.mean_colours_used = coloured ? used_sum / static_cast<double>(coloured) : kNaN;
        row.wall_seconds = seconds_since(start);
        report.rows.push_back(row);
    }
    return report;
}

// --- optimal campaign ------------------------------------------------------------

double OptimalRow::y_rate() const { return rate(y_passes, trials); }
double OptimalRow::x_rate() const { return rate(x_passes, trials); }
double OptimalRow::deviation_rate() const { return rate(deviation_passes, trials); }
double OptimalRow::homomorphism_rate() const { return rate(homomorphism_passes, trials); }

std::string OptimalRow::notes() const {
    std::string out;
    auto add = [&](const char *note) {
        if (!out.empty())
            out += ';';
        out += note;
    };
    if (x_vacuous)
        add("vacuous_x_bound");
    if (!case3)
        add("regime_violation");
    if (case3 && palette == sqrt_n)
        add("optimal_palette");
    return out;
}

OptimalReport run_optimal_campaign(const OptimalConfig &cfg) {
    if (cfg.trials == 0)
        throw std::invalid_argument("optimal campaign: trials must be positive");

    OptimalReport report;
    report.config = cfg;
    for (const OptimalInstance &inst : cfg.instances) {
        const auto start = std::chrono::steady_clock::now();
        const std::size_t n = inst.m * inst.m * inst.t * inst.t;
        const double r = inst.c * std::pow(static_cast<double>(n), -0.25);
        OptimalParams op = derive_optimal_params(inst.m, inst.t, r);
        if (inst.d)
            op.d = *inst.d;
        op.validate();
        const HParams target{op.m, op.d, op.t};
        const bool case3 = classify_case(target) == TheoremCase::Case3;
        const std::uint64_t stream = mix64(n) ^ std::bit_cast<std::uint64_t>(inst.c) ^ (op.d << 1);

        std::vector<OptimalTrial> trials(cfg.trials);
        for_each_trial(cfg.trials, cfg.threads, [&](std::size_t k) {
            const RggSample sample = sample_rgg(n, r, trial_seed(cfg.base_seed, stream, k));
            const EmbeddingMap em = embed_optimal(sample.points, op);
            OptimalTrial &trial = trials[k];
            trial.deviation = check_deviation_bounds(em.partition);
            trial.homomorphism = check_homomorphism(sample.graph, em).ok;
            if (case3 && trial.homomorphism) {
                const ColouringPair pair = pull_back(colour_L(target), em);
                trial.coloured = true;
                trial.verified = verify(sample.graph, pair).ok();
            }
        });

        OptimalRow row;
        row.n = n;
        row.m = op.m;
        row.t = op.t;
        row.c = inst.c;
        row.r = r;
        row.d = op.d;
        row.base_seed = cfg.base_seed;
        row.trials = cfg.trials;
        row.case3 = case3;
        row.sqrt_n = op.m * op.t;
        row.palette = case3 ? ochi_L_upper(target) : 0;

        double y_sum = 0.0;
        double x_sum = 0.0;
        for (const OptimalTrial &trial : trials) {
            const DeviationCheck &dev = trial.deviation;
            row.y_bound = dev.y_bound;
            row.x_bound = dev.x_bound;
            row.x_vacuous = dev.x_vacuous();
            row.y_passes += dev.y_ok;
            row.x_passes += dev.x_ok;
            row.deviation_passes += dev.ok();
            row.homomorphism_passes += trial.homomorphism;
            row.implication_violations += dev.ok() && !trial.homomorphism;
            row.colour_successes += trial.coloured;
            row.verify_passes += trial.verified;
            y_sum += dev.max_y_dev;
            x_sum += dev.max_x_dev;
            row.max_y_dev = std::max(row.max_y_dev, dev.max_y_dev);
            row.max_x_dev = std::max(row.max_x_dev, dev.max_x_dev);
        }
        row.mean_max_y_dev = y_sum / static_cast<double>(cfg.trials);
        row.mean_max_x_dev = x_sum / static_cast<double>(cfg.trials);
        row.wall_seconds = seconds_since(start);
        report.rows.push_back(row);
    }
    return report;
}

// --- emission ----------------------------------------------------------------

namespace {

template <typename Row>
struct Column {
    const char *name;
    std::string (*csv)(const Row &);
    json (*js)(const Row &);
};

#define ORTHOGRID_INT_COL(Row, field) \
    Column<Row> { #field, [](const Row &r) { return std::to_string(r.field); }, [](const Row &r) { return json(r.field); } }
#define ORTHOGRID_REAL_COL(Row, name, expr)                                              \
    Column<Row> {                                                                        \
        name, [](const Row &r) { return format_double(expr); },                          \
            [](const Row &r) { return number_or_null(expr); }                            \
    }

const std::vector<Column<DenseRow>> &dense_columns() {
    static const std::vector<Column<DenseRow>> cols = {
        ORTHOGRID_INT_COL(DenseRow, n),
        ORTHOGRID_REAL_COL(DenseRow, "alpha", r.alpha),
        ORTHOGRID_REAL_COL(DenseRow, "r", r.r),
        ORTHOGRID_INT_COL(DenseRow, m),
        ORTHOGRID_INT_COL(DenseRow, t),
        ORTHOGRID_INT_COL(DenseRow, d),
        ORTHOGRID_INT_COL(DenseRow, base_seed),
        ORTHOGRID_INT_COL(DenseRow, trials),
        ORTHOGRID_INT_COL(DenseRow, embed_successes),
        ORTHOGRID_REAL_COL(DenseRow, "embed_rate", r.embed_rate()),
        ORTHOGRID_INT_COL(DenseRow, homomorphism_passes),
        ORTHOGRID_REAL_COL(DenseRow, "homomorphism_rate", r.homomorphism_rate()),
        ORTHOGRID_INT_COL(DenseRow, verify_passes),
        ORTHOGRID_REAL_COL(DenseRow, "verify_rate", r.verify_rate()),
        ORTHOGRID_REAL_COL(DenseRow, "mean_overflow_cells", r.mean_overflow_cells),
        ORTHOGRID_INT_COL(DenseRow, palette_bound),
        ORTHOGRID_INT_COL(DenseRow, lower_bound),
        ORTHOGRID_REAL_COL(DenseRow, "mean_palette", r.mean_palette),
        ORTHOGRID_INT_COL(DenseRow, max_palette),
        ORTHOGRID_REAL_COL(DenseRow, "mean_colours_used", r.mean_colours_used),
        ORTHOGRID_REAL_COL(DenseRow, "ratio_vs_upper", r.ratio_vs_upper()),
        ORTHOGRID_REAL_COL(DenseRow, "ratio_vs_sqrt_n", r.ratio_vs_sqrt_n()),
        ORTHOGRID_REAL_COL(DenseRow, "ratio_vs_chromatic", r.ratio_vs_chromatic()),
        ORTHOGRID_INT_COL(DenseRow, palette_bound_violations),
        ORTHOGRID_INT_COL(DenseRow, lower_bound_violations),
    };
    return cols;
}

const std::vector<Column<OptimalRow>> &optimal_columns() {
    static const std::vector<Column<OptimalRow>> cols = {
        ORTHOGRID_INT_COL(OptimalRow, n),
        ORTHOGRID_INT_COL(OptimalRow, m),
        ORTHOGRID_INT_COL(OptimalRow, t),
        ORTHOGRID_REAL_COL(OptimalRow, "c", r.c),
        ORTHOGRID_REAL_COL(OptimalRow, "r", r.r),
        ORTHOGRID_INT_COL(OptimalRow, d),
        ORTHOGRID_INT_COL(OptimalRow, base_seed),
        ORTHOGRID_INT_COL(OptimalRow, trials),
        ORTHOGRID_INT_COL(OptimalRow, case3),
        ORTHOGRID_REAL_COL(OptimalRow, "y_bound", r.y_bound),
        ORTHOGRID_REAL_COL(OptimalRow, "x_bound", r.x_bound),
        ORTHOGRID_INT_COL(OptimalRow, x_vacuous),
        ORTHOGRID_REAL_COL(OptimalRow, "y_rate", r.y_rate()),
        ORTHOGRID_REAL_COL(OptimalRow, "x_rate", r.x_rate()),
        ORTHOGRID_REAL_COL(OptimalRow, "deviation_rate", r.deviation_rate()),
        ORTHOGRID_REAL_COL(OptimalRow, "homomorphism_rate", r.homomorphism_rate()),
        ORTHOGRID_INT_COL(OptimalRow, implication_violations),
        ORTHOGRID_INT_COL(OptimalRow, colour_successes),
        ORTHOGRID_INT_COL(OptimalRow, verify_passes),
        ORTHOGRID_REAL_COL(OptimalRow, "mean_max_y_dev", r.mean_max_y_dev),
        ORTHOGRID_REAL_COL(OptimalRow, "max_y_dev", r.max_y_dev),
        ORTHOGRID_REAL_COL(OptimalRow, "mean_max_x_dev", r.mean_max_x_dev),
        ORTHOGRID_REAL_COL(OptimalRow, "max_x_dev", r.max_x_dev),
        ORTHOGRID_INT_COL(OptimalRow, palette),
        ORTHOGRID_INT_COL(OptimalRow, sqrt_n),
        Column<OptimalRow>{"notes", [](const OptimalRow &r) { return r.notes(); },
                           [](const OptimalRow &r) { return json(r.notes()); }},
    };
    return cols;
}

#undef ORTHOGRID_INT_COL
#undef ORTHOGRID_REAL_COL

template <typename Row>
void write_csv(std::ostream &out, const std::vector<Column<Row>> &cols, const std::vector<Row> &rows,
               bool with_timing) {
    for (std::size_t k = 0; k < cols.size(); ++k)
        out << (k ? "," : "") << cols[k].name;
    if (with_timing)
        out << ",wall_seconds";
    out << '\n';
    for (const Row &row : rows) {
        for (std::size_t k = 0; k < cols.size(); ++k)
            out << (k ? "," : "") << cols[k].csv(row);
        if (with_timing)
            out << ',' << format_double(row.wall_seconds);
        out << '\n';
    }
}

template <typename Row>
json rows_json(const std::vector<Column<Row>> &cols, const std::vector<Row> &rows, bool with_timing) {
    json out = json::array();
    for (const Row &row : rows) {
        json j = json::object();
        for (const auto &col : cols)
            j[col.name] = col.js(row);
        if (with_timing)
            j["wall_seconds"] = row.wall_seconds;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

json to_json(const DenseReport &report, bool with_timing) {
    const DenseConfig &cfg = report.config;
    return json{{"schema", "orthogrid.dense_campaign/1"},
                {"config",
                 {{"n_values", cfg.n_values}, {"alpha", cfg.alpha}, {"trials", cfg.trials}, {"base_seed", cfg.base_seed}}},
                {"rows", rows_json(dense_columns(), report.rows, with_timing)}};
}

json to_json(const OptimalReport &report, bool with_timing) {
    const OptimalConfig &cfg = report.config;
    json instances = json::array();
    for (const OptimalInstance &inst : cfg.instances) {
        instances.push_back({{"m", inst.m},
                             {"t", inst.t},
                             {"c", inst.c},
                             {"d", inst.d ? json(*inst.d) : json(nullptr)}});
    }
    return json{{"schema", "orthogrid.optimal_campaign/1"},
                {"config", {{"instances", instances}, {"trials", cfg.trials}, {"base_seed", cfg.base_seed}}},
                {"rows", rows_json(optimal_columns(), report.rows, with_timing)}};
}

json to_json(const TheoremOneSuite &suite) {
    json rows = json::array();
    for (const TheoremOneRow &row : suite.rows) {
        rows.push_back({{"m", row.params.m},
                        {"d", row.params.d},
                        {"t", row.params.t},
                        {"case", to_string(row.which)},
                        {"formula", row.formula},
                        {"palette", row.palette},
                        {"proper_c1", row.report.proper_c1},
                        {"proper_c2", row.report.proper_c2},
                        {"orthogonal", row.report.orthogonal},
                        {"oracle", row.oracle ? json(*row.oracle) : json(nullptr)},
                        {"degenerate", row.degenerate},
                        {"pass", row.pass}});
    }
    return json{{"schema", "orthogrid.theorem_one_suite/1"}, {"all_pass", suite.all_pass()}, {"rows", rows}};
}

void emit_report(std::ostream &out, const DenseReport &report, ReportFormat format, bool with_timing) {
    if (format == ReportFormat::Csv)
        write_csv(out, dense_columns(), report.rows, with_timing);
    else
        out << to_json(report, with_timing).dump(2) << '\n';
}

void emit_report(std::ostream &out, const OptimalReport &report, ReportFormat format, bool with_timing) {
    if (format == ReportFormat::Csv)
        write_csv(out, optimal_columns(), report.rows, with_timing);
    else
        out << to_json(report, with_timing).dump(2) << '\n';
}

void emit_report(std::ostream &out, const TheoremOneSuite &suite, ReportFormat format) {
    if (format == ReportFormat::Json) {
        out << to_json(suite).dump(2) << '\n';
        return;
    }
    out << "m,d,t,case,formula,palette,proper_c1,proper_c2,orthogonal,oracle,degenerate,pass\n";
    for (const TheoremOneRow &row : suite.rows) {
        out << row.params.m << ',' << row.params.d << ',' << row.params.t << ',' << to_string(row.which) << ','
            << row.formula << ',' << row.palette << ',' << row.report.proper_c1 << ',' << row.report.proper_c2 << ','
            << row.report.orthogonal << ',' << (row.oracle ? std::to_string(*row.oracle) : std::string()) << ','
            << row.degenerate << ',' << row.pass << '\n';
    }
}

}  // namespace orthogrid
