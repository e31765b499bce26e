#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "orthogrid/graph.hpp"

namespace orthogrid {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point &, const Point &) = default;
};

/// Points of a random geometric graph; index is vertex id.
struct PointSet {
    std::vector<Point> points;
    double r = 0.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return points.size(); }
};

struct RggSample {
    PointSet points;
    Graph graph;
};

/// `n` points uniform on [0,1)^2. The stream draws x then y for point 0,
/// then x then y for point 1, and so on.
std::vector<Point> sample_points(std::size_t n, std::uint64_t seed);

/// Threshold graph on `points`: uv is an edge iff |p_u - p_v| < r, strictly.
/// Uses a bucket grid whose cells are at least `r` wide, so only the 3x3
/// block around each point is scanned.
Graph threshold_graph(std::span<const Point> points, double r);

/// RG(n, r) from a seeded stream. Throws `std::invalid_argument` unless
/// n >= 1 and 0 < r <= sqrt(2).
RggSample sample_rgg(std::size_t n, double r, std::uint64_t seed);

/// RG(n, r) over caller-supplied points, which must lie in [0,1]^2.
RggSample rgg_from_points(std::vector<Point> points, double r, std::uint64_t seed = 0);

/// Parameters for the equal-size partition regime with r = n^-alpha:
/// t = ceil(ln n), m = ceil(sqrt(n)/ln n), l = 1/m,
/// d = ceil(n^(1/2-alpha)/ln n) + 2.
struct DenseParams {
    std::size_t n = 0;
    double alpha = 0.0;
    double r = 0.0;
    std::size_t t = 0;
    std::size_t m = 0;
    double l = 0.0;
    std::size_t d = 0;
};

/// Throws `std::invalid_argument` if n = 0 or alpha is outside [0, 1/4], and
/// `std::logic_error` if the derived values break r/l + 1 < d. For n < 3,
/// where ln n <= 1, a single cell with t^2 >= n and d = 3 is returned.
DenseParams derive_dense_params(std::size_t n, double alpha);

/// Parameters for the equal-count partition regime, n = m^2 t^2.
struct OptimalParams {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t t = 0;
    std::size_t d = 0;
    double r = 0.0;

    /// Throws `std::invalid_argument` unless n = m^2 t^2 with 1 <= t <= m,
    /// d >= 1 and r > 0.
    void validate() const;
};

/// d = floor(r m + 4 sqrt(m) ln(n) / t) + 1, the smallest integer strictly
/// above the right-hand side.
OptimalParams derive_optimal_params(std::size_t m, std::size_t t, double r);

enum class PartitionKind { EqualSize, EqualCount };

std::string_view to_string(PartitionKind kind);

/// Zero-based cell coordinates. For equal-size cells `i` indexes x and `j`
/// indexes y; for equal-count cells `i` is the horizontal strip (by y) and
/// `j` the cell within the strip (by x).
struct CellIndex {
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    friend bool operator==(const CellIndex &, const CellIndex &) = default;
};

struct CellPartition {
    PartitionKind kind = PartitionKind::EqualSize;
    std::size_t m = 0;
    /// Cells hold t^2 points each; 0 for equal-size partitions.
    std::size_t t = 0;
    std::vector<CellIndex> cell_of;
    /// Equal-count only: strip boundaries y*_0..y*_m.
    std::vector<double> y_star;
    /// Equal-count only: x_star[i] holds x*_{i,0}..x*_{i,m} for strip i.
    std::vector<std::vector<double>> x_star;

    std::size_t cell_id(Vertex v) const { return cell_of[v].i * m + cell_of[v].j; }
};

/// m x m equal squares. A coordinate c lands in cell min(ceil(c m), m) - 1,
/// with c = 0 placed in cell 0, so cells are (lo, hi] apart from the first.
CellPartition equal_size_partition(const PointSet &ps, std::size_t m);

/// m strips of m t^2 points by y order statistic, each split into m cells of
/// t^2 points by x order statistic. The k-th smallest value (k = i m t^2 for
/// strips, j t^2 within a strip) is the closing boundary, so a boundary
/// point belongs to the lower strip or cell. Ties break on vertex id.
/// Throws `std::invalid_argument` unless |ps| = m^2 t^2.
CellPartition equal_count_partition(const PointSet &ps, std::size_t m, std::size_t t);

struct DeviationCheck {
    bool y_ok = true;
    bool x_ok = true;
    double max_y_dev = 0.0;
    double max_x_dev = 0.0;
    /// 2 ln n / (m t)
    double y_bound = 0.0;
    /// 2 ln n / (t sqrt(m))
    double x_bound = 0.0;

    bool ok() const { return y_ok && x_ok; }
    /// The x bound cannot fail when it reaches the width of the square.
    bool x_vacuous() const { return x_bound >= 1.0; }
};

/// Compares every interior boundary with its evenly spaced position:
/// |y*_i - i/m| <= 2 ln n/(m t) and |x*_{i,j} - j/m| <= 2 ln n/(t sqrt m).
/// Throws `std::invalid_argument` for equal-size partitions.
DeviationCheck check_deviation_bounds(const CellPartition &cp);

/// (1/m)(max(|i-i'|, |j-j'|) - 1 - 4 sqrt(m) ln(n)/t): a lower bound on the
/// distance between points of the two cells when the boundary deviations
/// hold. No check is performed.
double cell_distance_bound(std::size_t m, std::size_t t, CellIndex a, CellIndex b);

/// `cell_distance_bound` for an equal-count partition, refusing with
/// `std::logic_error` when its boundaries fail the deviation bounds.
double min_cell_pair_distance(const CellPartition &cp, CellIndex a, CellIndex b);

}  // namespace orthogrid
