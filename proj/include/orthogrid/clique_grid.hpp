#pragma once

#include <cstddef>
#include <string_view>

#include "orthogrid/colouring.hpp"
#include "orthogrid/graph.hpp"

namespace orthogrid {

/// Parameters of H(m, d, t): a row of `m` cliques of size `t`, where cliques
/// `i1` and `i2` are fully joined iff |i1 - i2| <= d. The clique grid
/// L(m^2, d, t^2) is H(m, d, t) strong-multiplied with itself.
struct HParams {
    std::size_t m = 1;
    std::size_t d = 1;
    std::size_t t = 1;

    /// Throws `std::invalid_argument` unless all three are positive.
    void validate() const;

    friend bool operator==(const HParams &, const HParams &) = default;
};

enum class TheoremCase { Case1, Case2, Case3 };

std::string_view to_string(TheoremCase c);

/// Case 1: m <= t(d+1). Case 2: t(d+1) < m <= t(d+1)^2. Case 3 otherwise.
TheoremCase classify_case(const HParams &p);

/// Orthogonal chromatic number of H(m, d, t) as given by the closed form for
/// each case: t(d+1), t(d+1)+1 or ceil(sqrt(mt)).
std::size_t ochi_H(const HParams &p);

/// Upper bound on the orthogonal chromatic number of L(m^2, d, t^2);
/// always `ochi_H(p)^2`.
std::size_t ochi_L_upper(const HParams &p);

/// Vertex v_i^j of H has flat id i*t + j.
inline Vertex h_vertex(const HParams &p, std::size_t clique, std::size_t slot) {
    return static_cast<Vertex>(clique * p.t + slot);
}

/// Vertex `slot` (0..t^2-1) of clique C_{i,j} in L(m^2, d, t^2), labelled
/// consistently with `strong_product(build_H(p), build_H(p))`.
Vertex l_vertex(const HParams &p, std::size_t i, std::size_t j, std::size_t slot);

struct LCell {
    std::size_t i;
    std::size_t j;
};

/// Clique of an L vertex; inverse of `l_vertex` up to the slot.
LCell l_cell(const HParams &p, Vertex v);

/// True iff L vertices `a` and `b` are distinct and their cliques are within
/// `d` of each other in both coordinates.
bool l_adjacent(const HParams &p, Vertex a, Vertex b);

Graph build_H(const HParams &p);

/// L(m^2, d, t^2) built straight from the clique rule.
Graph build_L(const HParams &p);

/// Strong product; vertex (u, v) gets id u * |V(h)| + v.
Graph strong_product(const Graph &g, const Graph &h);

/// Orthogonal pair for H(m, d, t) over `ochi_H(p)` colours using the
/// case-specific closed forms.
ColouringPair colour_H(const HParams &p);

/// Pair for g x h from pairs on the factors:
/// c(u, v) = cg(u) * Nh + ch(v) for each of the two colourings.
ColouringPair compose_orthogonal(const ColouringPair &pg, const ColouringPair &ph);

}  // namespace orthogrid
