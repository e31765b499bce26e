// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// Thresholds and trial counts are fixed here and must not be relaxed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orthogrid/clique_grid.hpp"
#include "orthogrid/embed.hpp"
#include "orthogrid/experiments.hpp"
#include "orthogrid/geo.hpp"
#include "orthogrid/oracle.hpp"
#include "orthogrid/rng.hpp"
#include "support/oracles.hpp"

using namespace orthogrid;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

constexpr double kSuiteSeconds = 10.0;
constexpr double kOracleSeconds = 300.0;
constexpr std::size_t kProductRounds = 200;
constexpr std::size_t kFactorMaxVertices = 8;
constexpr std::size_t kSamplerSeeds = 20;
constexpr std::size_t kDenseN = 10'000;
constexpr double kDenseAlpha = 0.25;
constexpr std::size_t kDenseTrials = 100;
constexpr double kEmbedRateThreshold = 0.90;
constexpr double kDenseSeconds = 300.0;
constexpr std::size_t kTrendTrials = 30;
constexpr std::size_t kPartitionTrials = 50;
constexpr std::size_t kDeviationTrials = 100;
constexpr std::size_t kDeviationPassesRequired = 99;
constexpr std::uint64_t kBaseSeed = 20240601;

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char *pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

Outcome construction_suite() {
    const auto start = std::chrono::steady_clock::now();
    const TheoremOneSuite suite = run_theorem_one_suite(6, 2, 2, 0);
    bool ok = true;
    for (const TheoremOneRow &row : suite.rows)
        ok = ok && row.report.ok() && row.palette == row.formula;
    const double secs = elapsed(start);
    return {ok && secs < kSuiteSeconds,
            fmt("%zu instances verified with palette = formula, %.3fs (limit %.0fs)", suite.rows.size(), secs,
                kSuiteSeconds)};
}

Outcome oracle_tightness() {
    const auto start = std::chrono::steady_clock::now();
    const TheoremOneSuite suite = run_theorem_one_suite(6, 2, 2, 12);
    std::size_t checked = 0, mismatched = 0;
    for (const TheoremOneRow &row : suite.rows) {
        if (!row.oracle)
            continue;
        ++checked;
        if (row.degenerate) {
            // m <= d collapses H to K_{mt}; recorded rather than reconciled.
            std::printf("    degenerate (m,d,t)=(%zu,%zu,%zu): oracle %zu, formula %zu\n", row.params.m, row.params.d,
                        row.params.t, *row.oracle, row.formula);
            mismatched += *row.oracle != row.params.m * row.params.t;
        } else {
            mismatched += *row.oracle != row.formula;
        }
    }
    const double secs = elapsed(start);
    return {mismatched == 0 && secs < kOracleSeconds,
            fmt("%zu instances with mt <= 12, %zu unexplained mismatches, %zu degenerate listed above, %.2fs (limit "
                "%.0fs)",
                checked, mismatched, suite.degenerate_rows().size(), secs, kOracleSeconds)};
}

Outcome product_composition() {
    std::mt19937_64 rng(kBaseSeed);
    std::size_t passes = 0;
    for (std::size_t round = 0; round < kProductRounds; ++round) {
        const Graph g = testing::random_graph(1 + rng() % kFactorMaxVertices, 0.5, rng);
        const Graph h = testing::random_graph(1 + rng() % kFactorMaxVertices, 0.5, rng);
        const auto ng = brute_force_ochi(g, g.num_vertices());
        const auto nh = brute_force_ochi(h, h.num_vertices());
        if (!ng || !nh)
            continue;
        const ColouringPair pg = testing::scramble(*find_orthogonal_colouring(g, *ng), rng);
        const ColouringPair ph = testing::scramble(*find_orthogonal_colouring(h, *nh), rng);
        if (!verify(g, pg).ok() || !verify(h, ph).ok())
            continue;
        passes += verify(strong_product(g, h), compose_orthogonal(pg, ph)).ok();
    }
    return {passes == kProductRounds, fmt("%zu/%zu products verified", passes, kProductRounds)};
}

Outcome l_equivalence() {
    std::size_t same = 0, total = 0;
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t d = 1; d <= 2; ++d)
            for (std::size_t t = 1; t <= 2; ++t) {
                ++total;
                const HParams p{m, d, t};
                same += build_L(p) == strong_product(build_H(p), build_H(p));
            }
    const Graph king = build_L({5, 1, 1});
    bool degrees = king.num_vertices() == 25;
    for (std::size_t row = 0; row < 5 && degrees; ++row)
        for (std::size_t col = 0; col < 5; ++col) {
            const bool re = row == 0 || row == 4, ce = col == 0 || col == 4;
            const std::size_t want = re && ce ? 3 : (re || ce ? 5 : 8);
            degrees = degrees && king.degree(static_cast<Vertex>(row * 5 + col)) == want;
        }
    return {same == total && degrees,
            fmt("%zu/%zu labelled edge sets identical; L(25,1,1) degrees 3/5/8: %s", same, total,
                degrees ? "yes" : "no")};
}

Outcome sampler_oracle() {
    std::size_t equal = 0, total = 0;
    for (std::size_t n : {100u, 1000u, 10000u})
        for (double r : {0.01, 0.1})
            for (std::uint64_t k = 0; k < kSamplerSeeds; ++k) {
                ++total;
                const RggSample s = sample_rgg(n, r, trial_seed(kBaseSeed, n, k));
                equal += s.graph.edges() == testing::all_pairs_edges(s.points.points, r);
            }
    return {equal == total, fmt("%zu/%zu instances exactly equal", equal, total)};
}

Outcome dense_pipeline() {
    const auto start = std::chrono::steady_clock::now();
    const DenseReport report = run_dense_campaign({{kDenseN}, kDenseAlpha, kDenseTrials, kBaseSeed, 0});
    const DenseRow &row = report.rows.at(0);
    const double secs = elapsed(start);
    const bool hom = row.homomorphism_passes == row.embed_successes;
    const bool ver = row.verify_passes == row.embed_successes;
    const bool bound = row.palette_bound_violations == 0;
    const bool rate = row.embed_rate() >= kEmbedRateThreshold;
    return {hom && ver && bound && rate && secs < kDenseSeconds,
            fmt("n=%zu m=%zu t=%zu d=%zu: embed %zu/%zu (rate %.2f, need >= %.2f); homomorphism %zu/%zu; verify "
                "%zu/%zu; palette <= %zu violations %zu; mean overfull cells %.2f; %.1fs",
                row.n, row.m, row.t, row.d, row.embed_successes, row.trials, row.embed_rate(), kEmbedRateThreshold,
                row.homomorphism_passes, row.embed_successes, row.verify_passes, row.embed_successes,
                row.palette_bound, row.palette_bound_violations, row.mean_overflow_cells, secs)};
}

Outcome palette_trend() {
    const DenseReport report = run_dense_campaign({{1000, 10000, 100000}, kDenseAlpha, kTrendTrials, kBaseSeed, 0});
    bool ok = true;
    double previous = INFINITY;
    std::string detail;
    for (const DenseRow &row : report.rows) {
        const double ratio = row.ratio_vs_sqrt_n();
        // A NaN ratio (no successful embedding) cannot witness the trend.
        ok = ok && !std::isnan(ratio) && ratio <= previous;
        previous = ratio;
        detail += fmt("n=%zu: embed %zu/%zu, mean palette %.1f, ratio %.3f; ", row.n, row.embed_successes, row.trials,
                      row.mean_palette, ratio);
    }
    return {ok, detail + "non-increasing required"};
}

Outcome partition_exactness() {
    std::size_t exact = 0, total = 0;
    for (auto [m, t] : {std::pair<std::size_t, std::size_t>{10, 2}, {20, 5}}) {
        const std::size_t n = m * m * t * t;
        for (std::uint64_t k = 0; k < kPartitionTrials; ++k) {
            ++total;
            const PointSet ps{sample_points(n, trial_seed(kBaseSeed, n, k)), 0.0, 0};
            const CellPartition cp = equal_count_partition(ps, m, t);
            std::vector<std::size_t> count(m * m, 0);
            for (Vertex v = 0; v < n; ++v)
                ++count[cp.cell_id(v)];
            bool all = true;
            for (std::size_t c : count)
                all = all && c == t * t;
            exact += all;
        }
    }
    return {exact == total, fmt("%zu/%zu trials with every cell holding exactly t^2 points", exact, total)};
}

Outcome concentration() {
    const OptimalReport report = run_optimal_campaign({{{20, 5, 0.9, std::nullopt}}, kDeviationTrials, kBaseSeed, 0});
    const OptimalRow &row = report.rows.at(0);
    std::string x = row.x_vacuous ? "vacuous (bound >= 1)" : fmt("%zu/%zu", row.x_passes, row.trials);
    return {row.y_passes >= kDeviationPassesRequired,
            fmt("n=%zu m=%zu t=%zu: y bound %.4f held in %zu/%zu (need >= %zu), max dev %.4f; x bound %.4f: %s, max "
                "dev %.4f; homomorphism %zu/%zu",
                row.n, row.m, row.t, row.y_bound, row.y_passes, row.trials, kDeviationPassesRequired, row.max_y_dev,
                row.x_bound, x.c_str(), row.max_x_dev, row.homomorphism_passes, row.trials)};
}

Outcome determinism() {
    auto render = [](auto make) {
        std::ostringstream csv, js;
        const auto report = make();
        emit_report(csv, report, ReportFormat::Csv);
        emit_report(js, report, ReportFormat::Json);
        return csv.str() + '\x1f' + js.str();
    };
    auto dense = [] { return run_dense_campaign({{100, 1000}, kDenseAlpha, 10, kBaseSeed, 0}); };
    auto optimal = [] {
        return run_optimal_campaign({{{10, 2, 0.5, std::nullopt}, {9, 1, 0.1, 1}}, 10, kBaseSeed, 0});
    };
    auto suite = [] { return run_theorem_one_suite(4, 2, 2); };
    const bool d = render(dense) == render(dense);
    const bool o = render(optimal) == render(optimal);
    const bool s = render(suite) == render(suite);
    return {d && o && s, fmt("dense %s, optimal %s, theorem suite %s", d ? "identical" : "differs",
                             o ? "identical" : "differs", s ? "identical" : "differs")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"construction suite m<=6 d<=2 t<=2", construction_suite},
        {"oracle tightness mt<=12", oracle_tightness},
        {"product composition", product_composition},
        {"clique grid equivalence", l_equivalence},
        {"bucketed sampler vs all pairs", sampler_oracle},
        {"dense pipeline n=1e4 alpha=1/4", dense_pipeline},
        {"palette/sqrt(n) trend", palette_trend},
        {"equal-count partition exactness", partition_exactness},
        {"order-statistic concentration", concentration},
        {"replay determinism", determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome out;
        try {
            out = criteria[k].second();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failures += !out.pass;
        std::printf("%s %zu: %s | %s\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
