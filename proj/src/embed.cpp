#include "orthogrid/embed.hpp"

#include <stdexcept>
#include <string>

namespace orthogrid {

namespace {

// Fills clique slots in vertex-id order; `capacity` slots per cell.
std::vector<Vertex> assign_slots(const CellPartition &cp, const HParams &target, std::size_t capacity,
                                 std::vector<std::size_t> &fill) {
    fill.assign(cp.m * cp.m, 0);
    std::vector<Vertex> out(cp.cell_of.size());
    for (std::size_t v = 0; v < cp.cell_of.size(); ++v) {
        const std::size_t id = cp.cell_id(static_cast<Vertex>(v));
        const std::size_t slot = fill[id]++;
        if (slot < capacity)
            out[v] = l_vertex(target, cp.cell_of[v].i, cp.cell_of[v].j, slot);
    }
    return out;
}

}  // namespace

std::string_view to_string(Regime regime) { return regime == Regime::Dense ? "dense" : "optimal"; }

std::string_view to_string(FailureKind kind) {
    switch (kind) {
    case FailureKind::None:
        return "none";
    case FailureKind::CellOverflow:
        return "cell_overflow";
    case FailureKind::HomomorphismFailure:
        return "homomorphism_failure";
    case FailureKind::RegimeViolation:
        return "regime_violation";
    }
    return "unknown";
}

DenseEmbedding embed_dense(const PointSet &ps, const DenseParams &dp) {
    EmbeddingMap em;
    em.target = HParams{dp.m, dp.d, dp.t};
    em.target.validate();
    em.regime = Regime::Dense;
    em.partition = equal_size_partition(ps, dp.m);

    const std::size_t capacity = dp.t * dp.t;
    std::vector<std::size_t> fill;
    em.vertex_map = assign_slots(em.partition, em.target, capacity, fill);

    CellOverflow overflow;
    overflow.capacity = capacity;
    for (std::size_t id = 0; id < fill.size(); ++id) {
        if (fill[id] > capacity)
            overflow.cells.push_back(
                {{static_cast<std::uint32_t>(id / dp.m), static_cast<std::uint32_t>(id % dp.m)}, fill[id]});
    }
    if (!overflow.cells.empty())
        return overflow;
    return em;
}

EmbeddingMap embed_optimal(const PointSet &ps, const OptimalParams &op) {
    op.validate();
    EmbeddingMap em;
    em.target = HParams{op.m, op.d, op.t};
    em.regime = Regime::Optimal;
    em.partition = equal_count_partition(ps, op.m, op.t);
    std::vector<std::size_t> fill;
    em.vertex_map = assign_slots(em.partition, em.target, op.t * op.t, fill);
    return em;
}

HomomorphismCheck check_homomorphism(const Graph &g, const EmbeddingMap &em) {
    if (em.vertex_map.size() != g.num_vertices())
        throw std::invalid_argument("check_homomorphism: embedding does not cover the graph");
    HomomorphismCheck out;
    const std::size_t n = g.num_vertices();
    for (std::size_t u = 0; u < n && out.ok; ++u) {
        for (Vertex v : g.neighbours(static_cast<Vertex>(u))) {
            if (v > u && !l_adjacent(em.target, em.vertex_map[u], em.vertex_map[v])) {
                out.ok = false;
                out.first_violation = Edge{static_cast<Vertex>(u), v};
                break;
            }
        }
    }
    return out;
}

HomomorphismCheck check_homomorphism(const Graph &g, const EmbeddingMap &em, const Graph &target) {
    if (em.vertex_map.size() != g.num_vertices())
        throw std::invalid_argument("check_homomorphism: embedding does not cover the graph");
    HomomorphismCheck out;
    const std::size_t n = g.num_vertices();
    for (std::size_t u = 0; u < n && out.ok; ++u) {
        for (Vertex v : g.neighbours(static_cast<Vertex>(u))) {
            if (v > u && !target.adjacent(em.vertex_map[u], em.vertex_map[v])) {
                out.ok = false;
                out.first_violation = Edge{static_cast<Vertex>(u), v};
                break;
            }
        }
    }
    return out;
}

ColouringPair pull_back(const ColouringPair &target_pair, const EmbeddingMap &em) {
    ColouringPair out;
    out.palette_size = target_pair.palette_size;
    out.c1.reserve(em.vertex_map.size());
    out.c2.reserve(em.vertex_map.size());
    for (Vertex image : em.vertex_map) {
        out.c1.push_back(target_pair.c1.at(image));
        out.c2.push_back(target_pair.c2.at(image));
    }
    return out;
}

ColouringPair colour_L(const HParams &p) {
    const ColouringPair h = colour_H(p);
    return compose_orthogonal(h, h);
}

namespace {

ColouredRGG finish(ColouredRGG out, const RggSample &sample, const EmbeddingMap &em) {
    const HomomorphismCheck hom = check_homomorphism(sample.graph, em);
    out.homomorphism_ok = hom.ok;
    if (!hom.ok) {
        out.failure = FailureKind::HomomorphismFailure;
        return out;
    }
    out.pair = pull_back(colour_L(em.target), em);
    out.palette_size = out.pair->palette_size;
    out.report = verify(sample.graph, *out.pair);
    return out;
}

}  // namespace

ColouredRGG colour_rgg_dense(const RggSample &sample, const DenseParams &dp) {
    ColouredRGG out;
    out.regime = Regime::Dense;
    out.target = HParams{dp.m, dp.d, dp.t};
    out.n = sample.points.size();
    out.r = sample.points.r;

    DenseEmbedding embedded = embed_dense(sample.points, dp);
    if (auto *overflow = std::get_if<CellOverflow>(&embedded)) {
        out.failure = FailureKind::CellOverflow;
        out.overflow = std::move(overflow->cells);
        return out;
    }
    return finish(std::move(out), sample, std::get<EmbeddingMap>(embedded));
}

ColouredRGG colour_rgg_optimal(const RggSample &sample, const OptimalParams &op) {
    op.validate();
    ColouredRGG out;
    out.regime = Regime::Optimal;
    out.target = HParams{op.m, op.d, op.t};
    out.n = sample.points.size();
    out.r = sample.points.r;

    if (classify_case(out.target) != TheoremCase::Case3) {
        out.failure = FailureKind::RegimeViolation;
        return out;
    }
    const EmbeddingMap em = embed_optimal(sample.points, op);
    out.deviation = check_deviation_bounds(em.partition);
    return finish(std::move(out), sample, em);
}

}  // namespace orthogrid
