#include "orthogrid/clique_grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthogrid {

namespace {

std::size_t checked_mul(std::size_t a, std::size_t b, std::string_view what) {
    std::size_t out = 0;
    if (__builtin_mul_overflow(a, b, &out) || out > std::numeric_limits<Vertex>::max())
        throw std::overflow_error(std::string(what) + ": vertex count overflows");
    return out;
}

std::size_t diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

std::size_t ceil_sqrt(std::size_t n) { return clique_number_lower_bound(n); }

// Sorted closed neighbourhood N[v].
std::vector<Vertex> closed_neighbourhood(const Graph &g, Vertex v) {
    auto row = g.neighbours(v);
    std::vector<Vertex> out(row.begin(), row.end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

}  // namespace

void HParams::validate() const {
    if (m == 0 || d == 0 || t == 0)
        throw std::invalid_argument("H parameters must be positive (m=" + std::to_string(m) +
                                    ", d=" + std::to_string(d) + ", t=" + std::to_string(t) + ")");
}

std::string_view to_string(TheoremCase c) {
    switch (c) {
    case TheoremCase::Case1:
        return "case1";
    case TheoremCase::Case2:
        return "case2";
    case TheoremCase::Case3:
        return "case3";
    }
    return "unknown";
}

TheoremCase classify_case(const HParams &p) {
    p.validate();
    const std::size_t clique = p.t * (p.d + 1);
    if (p.m <= clique)
        return TheoremCase::Case1;
    if (p.m <= clique * (p.d + 1))
        return TheoremCase::Case2;
    return TheoremCase::Case3;
}

std::size_t ochi_H(const HParams &p) {
    switch (classify_case(p)) {
    case TheoremCase::Case1:
        return p.t * (p.d + 1);
    case TheoremCase::Case2:
        return p.t * (p.d + 1) + 1;
    case TheoremCase::Case3:
        return ceil_sqrt(p.m * p.t);
    }
    return 0;
}

std::size_t ochi_L_upper(const HParams &p) {
    const std::size_t n = ochi_H(p);
    return n * n;
}

Vertex l_vertex(const HParams &p, std::size_t i, std::size_t j, std::size_t slot) {
    const std::size_t side = p.m * p.t;
    const std::size_t u = i * p.t + slot / p.t;
    const std::size_t v = j * p.t + slot % p.t;
    return static_cast<Vertex>(u * side + v);
}

LCell l_cell(const HParams &p, Vertex v) {
    const std::size_t side = p.m * p.t;
    return {(v / side) / p.t, (v % side) / p.t};
}

bool l_adjacent(const HParams &p, Vertex a, Vertex b) {
    if (a == b)
        return false;
    const LCell ca = l_cell(p, a);
    const LCell cb = l_cell(p, b);
    return diff(ca.i, cb.i) <= p.d && diff(ca.j, cb.j) <= p.d;
}

Graph build_H(const HParams &p) {
    p.validate();
    const std::size_t n = checked_mul(p.m, p.t, "build_H");
    std::vector<Edge> edges;
    for (std::size_t i1 = 0; i1 < p.m; ++i1) {
        const std::size_t last = std::min(p.m - 1, i1 + p.d);
        for (std::size_t i2 = i1; i2 <= last; ++i2) {
            for (std::size_t j1 = 0; j1 < p.t; ++j1) {
                for (std::size_t j2 = (i1 == i2 ? j1 + 1 : 0); j2 < p.t; ++j2)
                    edges.push_back({h_vertex(p, i1, j1), h_vertex(p, i2, j2)});
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph build_L(const HParams &p) {
    p.validate();
    const std::size_t side = checked_mul(p.m, p.t, "build_L");
    const std::size_t n = checked_mul(side, side, "build_L");
    const std::size_t slots = p.t * p.t;

    std::vector<Edge> edges;
    for (std::size_t i1 = 0; i1 < p.m; ++i1) {
        for (std::size_t j1 = 0; j1 < p.m; ++j1) {
            for (std::size_t i2 = i1; i2 <= std::min(p.m - 1, i1 + p.d); ++i2) {
                const std::size_t j_lo = j1 >= p.d ? j1 - p.d : 0;
                const std::size_t j_hi = std::min(p.m - 1, j1 + p.d);
                for (std::size_t j2 = j_lo; j2 <= j_hi; ++j2) {
                    // Visit each unordered clique pair once.
                    if (i2 == i1 && j2 < j1)
                        continue;
                    const bool same = i1 == i2 && j1 == j2;
                    for (std::size_t s1 = 0; s1 < slots; ++s1) {
                        for (std::size_t s2 = same ? s1 + 1 : 0; s2 < slots; ++s2)
                            edges.push_back({l_vertex(p, i1, j1, s1), l_vertex(p, i2, j2, s2)});
                    }
                }
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph strong_product(const Graph &g, const Graph &h) {
    const std::size_t ng = g.num_vertices();
    const std::size_t nh = h.num_vertices();
    const std::size_t n = checked_mul(ng, nh, "strong_product");

    std::vector<std::vector<Vertex>> closed_h(nh);
    for (std::size_t v = 0; v < nh; ++v)
        closed_h[v] = closed_neighbourhood(h, static_cast<Vertex>(v));

    std::vector<std::size_t> offsets{0};
    offsets.reserve(n + 1);
    std::vector<Vertex> targets;
    for (std::size_t u = 0; u < ng; ++u) {
        const auto closed_g = closed_neighbourhood(g, static_cast<Vertex>(u));
        for (std::size_t v = 0; v < nh; ++v) {
            const std::size_t self = u * nh + v;
            for (Vertex u2 : closed_g) {
                for (Vertex v2 : closed_h[v]) {
                    const std::size_t id = static_cast<std::size_t>(u2) * nh + v2;
                    if (id != self)
                        targets.push_back(static_cast<Vertex>(id));
                }
            }
            offsets.push_back(targets.size());
        }
    }
    return Graph::from_rows(std::move(offsets), std::move(targets));
}

ColouringPair colour_H(const HParams &p) {
    const TheoremCase which = classify_case(p);
    const std::size_t n = checked_mul(p.m, p.t, "colour_H");
    const std::size_t base = p.t * (p.d + 1);

    ColouringPair pair;
    pair.palette_size = ochi_H(p);
    pair.c1.resize(n);
    pair.c2.resize(n);

    for (std::size_t i = 0; i < p.m; ++i) {
        for (std::size_t j = 0; j < p.t; ++j) {
            const std::size_t lin = j + i * p.t;
            const Vertex v = h_vertex(p, i, j);
            switch (which) {
            case TheoremCase::Case1:
                pair.c1[v] = static_cast<Colour>(lin % base);
                pair.c2[v] = static_cast<Colour>(((j + i / (p.d + 1)) % p.t + i * p.t) % base);
                break;
            case TheoremCase::Case2:
                // The shifted-block formula for this case is not proper (H(3,1,1)
                // gives c2 = 0,1,1). The staircase below with palette N+1 is:
                // N+1 > t(d+1) and mt <= t^2(d+1)^2 < (N+1)^2.
            case TheoremCase::Case3: {
                const std::size_t big = pair.palette_size;
                pair.c1[v] = static_cast<Colour>(lin % big);
                pair.c2[v] = static_cast<Colour>((lin + lin / big) % big);
                break;
            }
            }
        }
    }
    return pair;
}

ColouringPair compose_orthogonal(const ColouringPair &pg, const ColouringPair &ph) {
    if (pg.c1.size() != pg.c2.size() || ph.c1.size() != ph.c2.size())
        throw std::invalid_argument("compose_orthogonal: colourings within a pair differ in length");
    const std::size_t ng = pg.c1.size();
    const std::size_t nh = ph.c1.size();
    checked_mul(ng, nh, "compose_orthogonal");
    std::size_t palette = 0;
    if (__builtin_mul_overflow(pg.palette_size, ph.palette_size, &palette) ||
        palette > std::numeric_limits<Colour>::max())
        throw std::overflow_error("compose_orthogonal: palette overflows");

    ColouringPair out;
    out.palette_size = palette;
    out.c1.resize(ng * nh);
    out.c2.resize(ng * nh);
    for (std::size_t u = 0; u < ng; ++u) {
        for (std::size_t v = 0; v < nh; ++v) {
            const std::size_t id = u * nh + v;
            out.c1[id] = static_cast<Colour>(pg.c1[u] * ph.palette_size + ph.c1[v]);
            out.c2[id] = static_cast<Colour>(pg.c2[u] * ph.palette_size + ph.c2[v]);
        }
    }
    return out;
}

}  // namespace orthogrid
