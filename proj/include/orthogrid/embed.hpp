#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "orthogrid/clique_grid.hpp"
#include "orthogrid/colouring.hpp"
#include "orthogrid/geo.hpp"
#include "orthogrid/graph.hpp"

namespace orthogrid {

enum class Regime { Dense, Optimal };

std::string_view to_string(Regime regime);

/// Injective map from the vertices of a geometric graph into L(m^2, d, t^2).
/// Points of cell (i, j) fill the slots of clique C_{i,j} in vertex-id order.
struct EmbeddingMap {
    HParams target;
    Regime regime = Regime::Dense;
    std::vector<Vertex> vertex_map;
    CellPartition partition;
};

struct OverfullCell {
    CellIndex cell;
    std::size_t count;

    friend bool operator==(const OverfullCell &, const OverfullCell &) = default;
};

/// Some equal-size cell received more than t^2 points.
struct CellOverflow {
    std::size_t capacity = 0;
    std::vector<OverfullCell> cells;
};

using DenseEmbedding = std::variant<EmbeddingMap, CellOverflow>;

/// Equal-size partition with `dp.m` cells per side into L(m^2, d, t^2).
/// Overflow is an expected outcome at finite n and is returned, not thrown.
DenseEmbedding embed_dense(const PointSet &ps, const DenseParams &dp);

/// Equal-count partition into L(m^2, d, t^2); always a bijection.
EmbeddingMap embed_optimal(const PointSet &ps, const OptimalParams &op);

struct HomomorphismCheck {
    bool ok = true;
    std::optional<Edge> first_violation;
};

/// Every edge of `g` must land on an edge of the target clique grid, judged
/// by the clique rule without building the target.
HomomorphismCheck check_homomorphism(const Graph &g, const EmbeddingMap &em);

/// Same check against an explicit target graph.
HomomorphismCheck check_homomorphism(const Graph &g, const EmbeddingMap &em, const Graph &target);

/// Colours vertex v with the target's colours at em.vertex_map[v].
ColouringPair pull_back(const ColouringPair &target_pair, const EmbeddingMap &em);

/// Orthogonal pair for L(m^2, d, t^2): the product of `colour_H(p)` with itself.
ColouringPair colour_L(const HParams &p);

enum class FailureKind { None, CellOverflow, HomomorphismFailure, RegimeViolation };

std::string_view to_string(FailureKind kind);

struct ColouredRGG {
    Regime regime = Regime::Dense;
    HParams target;
    std::size_t n = 0;
    double r = 0.0;
    std::optional<ColouringPair> pair;
    std::size_t palette_size = 0;
    bool homomorphism_ok = false;
    FailureKind failure = FailureKind::None;
    std::optional<VerificationReport> report;
    std::optional<DeviationCheck> deviation;
    std::vector<OverfullCell> overflow;

    bool success() const { return failure == FailureKind::None; }
};

/// Full dense pipeline: embed, check, colour the grid, pull back, verify.
ColouredRGG colour_rgg_dense(const RggSample &sample, const DenseParams &dp);

/// Full optimal pipeline. Requires the target to be in Case 3
/// (m > t(d+1)^2); otherwise reports `RegimeViolation` without colouring.
ColouredRGG colour_rgg_optimal(const RggSample &sample, const OptimalParams &op);

}  // namespace orthogrid
