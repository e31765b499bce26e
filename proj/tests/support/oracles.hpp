#pragma once

// Reference computations used only by the tests. They deliberately take the
// slow, obvious route so they stay independent of the library code they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "orthogrid/colouring.hpp"
#include "orthogrid/geo.hpp"
#include "orthogrid/graph.hpp"

namespace orthogrid::testing {

/// Every pair compared directly.
inline std::vector<Edge> all_pairs_edges(const std::vector<Point> &points, double r) {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < points.size(); ++u) {
        for (std::size_t v = u + 1; v < points.size(); ++v) {
            const double dx = points[u].x - points[v].x;
            const double dy = points[u].y - points[v].y;
            if (dx * dx + dy * dy < r * r)
                out.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    }
    return out;
}

/// Pair-injectivity through a std::set of colour pairs.
inline bool pairs_distinct(const ColouringPair &p) {
    std::set<std::pair<Colour, Colour>> seen;
    for (std::size_t v = 0; v < p.c1.size(); ++v) {
        if (!seen.insert({p.c1[v], p.c2[v]}).second)
            return false;
    }
    return true;
}

/// Properness over an explicit edge list.
inline bool proper_on(const std::vector<Edge> &edges, const std::vector<Colour> &c) {
    return std::none_of(edges.begin(), edges.end(), [&](const Edge &e) { return c[e.u] == c[e.v]; });
}

/// The adjacency rule of L(m^2, d, t^2) evaluated on raw (row, column)
/// product coordinates: u = (i1 t + a), v = (j1 t + b).
inline bool l_rule(std::size_t m, std::size_t d, std::size_t t, std::size_t x, std::size_t y) {
    const std::size_t side = m * t;
    const long i1 = static_cast<long>((x / side) / t), j1 = static_cast<long>((x % side) / t);
    const long i2 = static_cast<long>((y / side) / t), j2 = static_cast<long>((y % side) / t);
    return x != y && std::labs(i1 - i2) <= static_cast<long>(d) && std::labs(j1 - j2) <= static_cast<long>(d);
}

/// Erdos-Renyi graph on n vertices.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    return Graph::from_edges(n, edges);
}

/// Applies independent random colour permutations to c1 and c2.
inline ColouringPair scramble(ColouringPair p, std::mt19937_64 &rng) {
    std::vector<Colour> perm1(p.palette_size), perm2(p.palette_size);
    for (std::size_t k = 0; k < p.palette_size; ++k)
        perm1[k] = perm2[k] = static_cast<Colour>(k);
    std::shuffle(perm1.begin(), perm1.end(), rng);
    std::shuffle(perm2.begin(), perm2.end(), rng);
    for (auto &c : p.c1)
        c = perm1[c];
    for (auto &c : p.c2)
        c = perm2[c];
    return p;
}

}  // namespace orthogrid::testing
