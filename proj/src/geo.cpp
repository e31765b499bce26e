#include "orthogrid/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "orthogrid/rng.hpp"

namespace orthogrid {

namespace {

void check_threshold(double r) {
    if (!(r > 0.0) || r > std::sqrt(2.0))
        throw std::invalid_argument("rgg: threshold r=" + std::to_string(r) + " outside (0, sqrt 2]");
}

void check_points(std::span<const Point> points) {
    for (std::size_t v = 0; v < points.size(); ++v) {
        const Point &p = points[v];
        if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0))
            throw std::invalid_argument("rgg: point " + std::to_string(v) + " lies outside the unit square");
    }
}

std::uint32_t size_cell(double c, std::size_t m) {
    const double scaled = std::ceil(c * static_cast<double>(m));
    const auto idx = static_cast<std::size_t>(std::max(scaled, 1.0));
    return static_cast<std::uint32_t>(std::min(idx, m) - 1);
}

}  // namespace

std::vector<Point> sample_points(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Point> points(n);
    for (Point &p : points) {
        p.x = rng.uniform();
        p.y = rng.uniform();
    }
    return points;
}

Graph threshold_graph(std::span<const Point> points, double r) {
    check_threshold(r);
    const std::size_t n = points.size();
    const double r2 = r * r;

    // Buckets of side 1/k >= r. k is capped so sparse inputs with tiny r do
    // not allocate a huge empty grid.
    const double by_radius = std::floor(1.0 / r);
    const double cap = std::ceil(std::sqrt(static_cast<double>(n))) + 1.0;
    const auto k = static_cast<std::size_t>(std::max(1.0, std::min(by_radius, cap)));
    auto bucket_of = [k](double c) {
        return std::min(static_cast<std::size_t>(c * static_cast<double>(k)), k - 1);
    };

    std::vector<std::size_t> bucket_start(k * k + 1, 0);
    std::vector<std::size_t> bucket(n);
    for (std::size_t v = 0; v < n; ++v) {
        bucket[v] = bucket_of(points[v].x) * k + bucket_of(points[v].y);
        ++bucket_start[bucket[v] + 1];
    }
    std::partial_sum(bucket_start.begin(), bucket_start.end(), bucket_start.begin());
    std::vector<Vertex> members(n);
    {
        std::vector<std::size_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (std::size_t v = 0; v < n; ++v)
            members[cursor[bucket[v]]++] = static_cast<Vertex>(v);
    }

    std::vector<std::size_t> offsets{0};
    offsets.reserve(n + 1);
    std::vector<Vertex> targets;
    std::vector<Vertex> row;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t bx = bucket[v] / k;
        const std::size_t by = bucket[v] % k;
        row.clear();
        for (std::size_t cx = bx > 0 ? bx - 1 : 0; cx <= std::min(bx + 1, k - 1); ++cx) {
            for (std::size_t cy = by > 0 ? by - 1 : 0; cy <= std::min(by + 1, k - 1); ++cy) {
                const std::size_t b = cx * k + cy;
                for (std::size_t s = bucket_start[b]; s < bucket_start[b + 1]; ++s) {
                    const Vertex w = members[s];
                    if (w == v)
                        continue;
                    const double dx = points[v].x - points[w].x;
                    const double dy = points[v].y - points[w].y;
                    if (dx * dx + dy * dy < r2)
                        row.push_back(w);
                }
            }
        }
        std::sort(row.begin(), row.end());
        targets.insert(targets.end(), row.begin(), row.end());
        offsets.push_back(targets.size());
    }
    return Graph::from_rows(std::move(offsets), std::move(targets));
}

RggSample sample_rgg(std::size_t n, double r, std::uint64_t seed) {
    if (n == 0)
        throw std::invalid_argument("rgg: need at least one point");
    check_threshold(r);
    return rgg_from_points(sample_points(n, seed), r, seed);
}

RggSample rgg_from_points(std::vector<Point> points, double r, std::uint64_t seed) {
    check_threshold(r);
    check_points(points);
    Graph g = threshold_graph(points, r);
    return {PointSet{std::move(points), r, seed}, std::move(g)};
}

DenseParams derive_dense_params(std::size_t n, double alpha) {
    if (n == 0)
        throw std::invalid_argument("dense params: need n >= 1");
    if (!(alpha >= 0.0 && alpha <= 0.25))
        throw std::invalid_argument("dense params: alpha=" + std::to_string(alpha) + " outside [0, 1/4]");

    const double nd = static_cast<double>(n);
    const double ln_n = std::log(nd);
    DenseParams p;
    p.n = n;
    p.alpha = alpha;
    p.r = std::pow(nd, -alpha);
    if (n < 3) {
        // ln n <= 1 breaks the formulas; one cell large enough for every point.
        p.t = n == 1 ? 1 : 2;
        p.m = 1;
        p.l = 1.0;
        p.d = 3;
        return p;
    }
    p.t = static_cast<std::size_t>(std::ceil(ln_n));
    p.m = static_cast<std::size_t>(std::ceil(std::sqrt(nd) / ln_n));
    p.l = 1.0 / static_cast<double>(p.m);
    p.d = static_cast<std::size_t>(std::ceil(std::pow(nd, 0.5 - alpha) / ln_n)) + 2;

    if (!(p.r / p.l + 1.0 < static_cast<double>(p.d)))
        throw std::logic_error("dense params: r/l + 1 < d fails for n=" + std::to_string(n));
    return p;
}

void OptimalParams::validate() const {
    if (t == 0 || m == 0 || t > m)
        throw std::invalid_argument("optimal params: need 1 <= t <= m");
    if (n != m * m * t * t)
        throw std::invalid_argument("optimal params: n must equal m^2 t^2");
    if (d == 0)
        throw std::invalid_argument("optimal params: d must be positive");
    if (!(r > 0.0))
        throw std::invalid_argument("optimal params: r must be positive");
}

OptimalParams derive_optimal_params(std::size_t m, std::size_t t, double r) {
    OptimalParams p;
    p.m = m;
    p.t = t;
    p.n = m * m * t * t;
    p.r = r;
    p.d = 1;
    p.validate();
    const double md = static_cast<double>(m);
    const double rhs = r * md + 4.0 * std::sqrt(md) * std::log(static_cast<double>(p.n)) / static_cast<double>(t);
    p.d = static_cast<std::size_t>(std::floor(rhs)) + 1;
    return p;
}

std::string_view to_string(PartitionKind kind) {
    return kind == PartitionKind::EqualSize ? "equal_size" : "equal_count";
}

CellPartition equal_size_partition(const PointSet &ps, std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("equal_size_partition: m must be positive");
    CellPartition cp;
    cp.kind = PartitionKind::EqualSize;
    cp.m = m;
    cp.cell_of.reserve(ps.size());
    for (const Point &p : ps.points)
        cp.cell_of.push_back({size_cell(p.x, m), size_cell(p.y, m)});
    return cp;
}

CellPartition equal_count_partition(const PointSet &ps, std::size_t m, std::size_t t) {
    if (m == 0 || t == 0)
        throw std::invalid_argument("equal_count_partition: m and t must be positive");
    const std::size_t per_cell = t * t;
    const std::size_t per_strip = m * per_cell;
    const std::size_t n = ps.size();
    if (n != m * per_strip)
        throw std::invalid_argument("equal_count_partition: have " + std::to_string(n) +
                                    " points, need m^2 t^2 = " + std::to_string(m * per_strip));

    CellPartition cp;
    cp.kind = PartitionKind::EqualCount;
    cp.m = m;
    cp.t = t;
    cp.cell_of.resize(n);
    cp.y_star.assign(m + 1, 0.0);
    cp.y_star[m] = 1.0;
    cp.x_star.assign(m, std::vector<double>(m + 1, 0.0));

    const auto &pts = ps.points;
    std::vector<Vertex> by_y(n);
    std::iota(by_y.begin(), by_y.end(), Vertex{0});
    std::sort(by_y.begin(), by_y.end(), [&](Vertex a, Vertex b) {
        return pts[a].y != pts[b].y ? pts[a].y < pts[b].y : a < b;
    });

    for (std::size_t i = 0; i < m; ++i) {
        const auto first = by_y.begin() + static_cast<std::ptrdiff_t>(i * per_strip);
        std::vector<Vertex> strip(first, first + static_cast<std::ptrdiff_t>(per_strip));
        if (i + 1 < m)
            cp.y_star[i + 1] = pts[strip.back()].y;

        std::sort(strip.begin(), strip.end(), [&](Vertex a, Vertex b) {
            return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : a < b;
        });
        auto &xs = cp.x_star[i];
        xs[m] = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t s = 0; s < per_cell; ++s)
                cp.cell_of[strip[j * per_cell + s]] = {static_cast<std::uint32_t>(i),
                                                       static_cast<std::uint32_t>(j)};
            if (j + 1 < m)
                xs[j + 1] = pts[strip[(j + 1) * per_cell - 1]].x;
        }
    }
    return cp;
}

DeviationCheck check_deviation_bounds(const CellPartition &cp) {
    if (cp.kind != PartitionKind::EqualCount)
        throw std::invalid_argument("check_deviation_bounds: needs an equal-count partition");
    const double md = static_cast<double>(cp.m);
    const double td = static_cast<double>(cp.t);
    const double ln_n = std::log(static_cast<double>(cp.cell_of.size()));

    DeviationCheck out;
    out.y_bound = 2.0 * ln_n / (md * td);
    out.x_bound = 2.0 * ln_n / (td * std::sqrt(md));
    for (std::size_t i = 1; i < cp.m; ++i)
        out.max_y_dev = std::max(out.max_y_dev, std::abs(cp.y_star[i] - static_cast<double>(i) / md));
    for (const auto &xs : cp.x_star) {
        for (std::size_t j = 1; j < cp.m; ++j)
            out.max_x_dev = std::max(out.max_x_dev, std::abs(xs[j] - static_cast<double>(j) / md));
    }
    out.y_ok = out.max_y_dev <= out.y_bound;
    out.x_ok = out.max_x_dev <= out.x_bound;
    return out;
}

double cell_distance_bound(std::size_t m, std::size_t t, CellIndex a, CellIndex b) {
    const double md = static_cast<double>(m);
    const double ln_n = std::log(md * md * static_cast<double>(t) * static_cast<double>(t));
    const double di = std::abs(static_cast<double>(a.i) - static_cast<double>(b.i));
    const double dj = std::abs(static_cast<double>(a.j) - static_cast<double>(b.j));
    return (std::max(di, dj) - 1.0 - 4.0 * std::sqrt(md) * ln_n / static_cast<double>(t)) / md;
}

double min_cell_pair_distance(const CellPartition &cp, CellIndex a, CellIndex b) {
    if (!check_deviation_bounds(cp).ok())
        throw std::logic_error("min_cell_pair_distance: partition boundaries break the deviation bounds");
    return cell_distance_bound(cp.m, cp.t, a, b);
}

}  // namespace orthogrid
