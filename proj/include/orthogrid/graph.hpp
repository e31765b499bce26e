#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace orthogrid {

using Vertex = std::uint32_t;

/// Undirected edge with `u < v`.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Undirected simple graph over vertex ids 0..n-1.
///
/// Adjacency is held in compressed sparse row form with every neighbour list
/// sorted, so `adjacent` is a binary search and `edges` is emitted in
/// lexicographic order.
class Graph {
public:
    Graph() = default;

    /// Graph with `n` vertices and no edges.
    explicit Graph(std::size_t n);

    /// Builds a graph from an edge list. Pairs may appear in either
    /// orientation and more than once; duplicates are merged. Self-loops and
    /// out-of-range ids throw `std::invalid_argument`.
    static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    /// Adopts compressed rows directly. Each row must be strictly increasing,
    /// free of self-loops and mirrored by the opposite row.
    static Graph from_rows(std::vector<std::size_t> offsets, std::vector<Vertex> targets);

    std::size_t num_vertices() const { return offsets_.size() - 1; }
    std::size_t num_edges() const { return targets_.size() / 2; }

    std::span<const Vertex> neighbours(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbours(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges with `u < v`, sorted.
    std::vector<Edge> edges() const;

    /// Calls `fn(u, v)` for every edge with `u < v`, in sorted order, without
    /// materialising the edge list.
    template <typename Fn>
    void for_each_edge(Fn &&fn) const {
        const std::size_t n = num_vertices();
        for (std::size_t u = 0; u < n; ++u) {
            for (Vertex v : neighbours(static_cast<Vertex>(u))) {
                if (v > u)
                    fn(static_cast<Vertex>(u), v);
            }
        }
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<std::size_t> offsets_ = {0};
    std::vector<Vertex> targets_;
};

}  // namespace orthogrid
