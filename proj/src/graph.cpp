#include "orthogrid/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace orthogrid {

namespace {

void check_vertex_count(std::size_t n) {
    if (n > std::numeric_limits<Vertex>::max())
        throw std::overflow_error("graph: vertex count " + std::to_string(n) + " exceeds id range");
}

}  // namespace

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {
    check_vertex_count(n);
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs)
        edges.push_back({a, b});
    return from_edges(n, std::span<const Edge>(edges));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);

    std::vector<std::size_t> degree(n, 0);
    for (const Edge &e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("graph: edge (" + std::to_string(e.u) + ", " +
                                        std::to_string(e.v) + ") references a vertex >= " +
                                        std::to_string(n));
        if (e.u == e.v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(e.u));
        ++degree[e.u];
        ++degree[e.v];
    }

    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] = g.offsets_[v] + degree[v];

    g.targets_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge &e : edges) {
        g.targets_[cursor[e.u]++] = e.v;
        g.targets_[cursor[e.v]++] = e.u;
    }

    // Sort each row and squeeze out duplicates, compacting in place.
    std::size_t write = 0;
    std::size_t row_begin = 0;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t row_end = g.offsets_[v + 1];
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(row_begin);
        auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(row_end);
        std::sort(first, last);
        last = std::unique(first, last);
        g.offsets_[v] = write;
        for (auto it = first; it != last; ++it)
            g.targets_[write++] = *it;
        row_begin = row_end;
    }
    g.offsets_[n] = write;
    g.targets_.resize(write);
    g.targets_.shrink_to_fit();
    return g;
}

Graph Graph::from_rows(std::vector<std::size_t> offsets, std::vector<Vertex> targets) {
    if (offsets.empty() || offsets.front() != 0 || offsets.back() != targets.size())
        throw std::invalid_argument("graph: malformed row offsets");
    const std::size_t n = offsets.size() - 1;
    check_vertex_count(n);

    std::size_t forward = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (offsets[v] > offsets[v + 1])
            throw std::invalid_argument("graph: row offsets decrease");
        for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) {
            const Vertex w = targets[k];
            if (w >= n || w == v || (k > offsets[v] && targets[k - 1] >= w))
                throw std::invalid_argument("graph: row " + std::to_string(v) +
                                            " is not a sorted loop-free neighbour list");
            forward += w > v;
        }
    }
    if (2 * forward != targets.size())
        throw std::invalid_argument("graph: rows are not symmetric");

    Graph g;
    g.offsets_ = std::move(offsets);
    g.targets_ = std::move(targets);
    return g;
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
    if (v >= num_vertices())
        throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range");
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto row = neighbours(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for_each_edge([&](Vertex u, Vertex v) { out.push_back({u, v}); });
    return out;
}

}  // namespace orthogrid
