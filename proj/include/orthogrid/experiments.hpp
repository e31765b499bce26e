#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthogrid/clique_grid.hpp"
#include "orthogrid/colouring.hpp"

namespace orthogrid {

// --- closed-form suite over H(m, d, t) --------------------------------------

struct TheoremOneRow {
    HParams params;
    TheoremCase which = TheoremCase::Case1;
    std::size_t formula = 0;  ///< ochi_H(params)
    std::size_t palette = 0;  ///< palette of colour_H(params)
    VerificationReport report;
    std::optional<std::size_t> oracle;  ///< exhaustive optimum, small instances only
    /// m <= d: every clique is joined to every other, so H is K_{mt} and the
    /// closed form t(d+1) overshoots the true value mt.
    bool degenerate = false;
    bool pass = false;
};

struct TheoremOneSuite {
    std::vector<TheoremOneRow> rows;

    bool all_pass() const;
    std::size_t oracle_checked() const;
    std::vector<TheoremOneRow> degenerate_rows() const;
};

/// Every (m, d, t) in [1, max]^3: colour_H must verify with palette equal to
/// the closed form. Where mt <= oracle_max_vertices the exhaustive optimum
/// must equal the closed form, or mt on degenerate rows.
TheoremOneSuite run_theorem_one_suite(std::size_t max_m, std::size_t max_d, std::size_t max_t,
                                      std::size_t oracle_max_vertices = 12);

// --- Monte Carlo campaigns ---------------------------------------------------

struct DenseConfig {
    std::vector<std::size_t> n_values;
    double alpha = 0.25;
    std::size_t trials = 100;
    std::uint64_t base_seed = 1;
    /// Worker threads; 0 picks the hardware concurrency.
    std::size_t threads = 0;
};

struct DenseRow {
    std::size_t n = 0;
    double alpha = 0.0;
    double r = 0.0;
    std::size_t m = 0;
    std::size_t t = 0;
    std::size_t d = 0;
    std::uint64_t base_seed = 0;
    std::size_t trials = 0;
    std::size_t embed_successes = 0;
    std::size_t homomorphism_passes = 0;  ///< among embed successes
    std::size_t verify_passes = 0;        ///< among embed successes
    std::size_t palette_bound_violations = 0;
    std::size_t lower_bound_violations = 0;
    double mean_overflow_cells = 0.0;
    std::size_t palette_bound = 0;  ///< (t(d+1)+1)^2
    std::size_t lower_bound = 0;    ///< ceil(sqrt n)
    /// Over successful trials; NaN when there were none.
    double mean_palette = 0.0;
    std::size_t max_palette = 0;
    double mean_colours_used = 0.0;
    double wall_seconds = 0.0;

    double embed_rate() const;
    double homomorphism_rate() const;
    double verify_rate() const;
    /// mean_palette / n^(1-2 alpha)
    double ratio_vs_upper() const;
    /// mean_palette / sqrt(n)
    double ratio_vs_sqrt_n() const;
    /// mean_palette / ((sqrt(3)/2) n^(1-2 alpha)), the chromatic-number scale
    double ratio_vs_chromatic() const;
};

struct DenseReport {
    DenseConfig config;
    std::vector<DenseRow> rows;
};

DenseReport run_dense_campaign(const DenseConfig &cfg);

struct OptimalInstance {
    std::size_t m = 1;
    std::size_t t = 1;
    /// r = c n^(-1/4)
    double c = 0.9;
    /// Replaces the derived d when set.
    std::optional<std::size_t> d;
};

struct OptimalConfig {
    std::vector<OptimalInstance> instances;
    std::size_t trials = 100;
    std::uint64_t base_seed = 1;
    std::size_t threads = 0;
};

struct OptimalRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t t = 0;
    double c = 0.0;
    double r = 0.0;
    std::size_t d = 0;
    std::uint64_t base_seed = 0;
    std::size_t trials = 0;
    bool case3 = false;  ///< m > t(d+1)^2
    double y_bound = 0.0;
    double x_bound = 0.0;
    bool x_vacuous = false;
    std::size_t y_passes = 0;
    std::size_t x_passes = 0;
    std::size_t deviation_passes = 0;
    std::size_t homomorphism_passes = 0;
    /// Trials where the deviation bounds held but the map was not a
    /// homomorphism; the distance bound predicts zero.
    std::size_t implication_violations = 0;
    std::size_t colour_successes = 0;
    std::size_t verify_passes = 0;
    double mean_max_y_dev = 0.0;
    double max_y_dev = 0.0;
    double mean_max_x_dev = 0.0;
    double max_x_dev = 0.0;
    std::size_t palette = 0;  ///< ceil(sqrt(mt))^2 when case3, else 0
    std::size_t sqrt_n = 0;
    double wall_seconds = 0.0;

    double y_rate() const;
    double x_rate() const;
    double deviation_rate() const;
    double homomorphism_rate() const;
    std::string notes() const;
};

struct OptimalReport {
    OptimalConfig config;
    std::vector<OptimalRow> rows;
};

OptimalReport run_optimal_campaign(const OptimalConfig &cfg);

// --- report emission -----------------------------------------------------------

enum class ReportFormat { Csv, Json };

/// Deterministic output: column order is fixed and wall time is emitted only
/// when `with_timing` is set.
void emit_report(std::ostream &out, const DenseReport &report, ReportFormat format, bool with_timing = false);
void emit_report(std::ostream &out, const OptimalReport &report, ReportFormat format, bool with_timing = false);
void emit_report(std::ostream &out, const TheoremOneSuite &suite, ReportFormat format);

nlohmann::json to_json(const DenseReport &report, bool with_timing = false);
nlohmann::json to_json(const OptimalReport &report, bool with_timing = false);
nlohmann::json to_json(const TheoremOneSuite &suite);

}  // namespace orthogrid
