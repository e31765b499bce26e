#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "orthogrid/graph.hpp"

namespace orthogrid {

using Colour = std::uint32_t;

/// Two vertex colourings over a shared palette `0..palette_size-1`.
struct ColouringPair {
    std::size_t palette_size = 0;
    std::vector<Colour> c1;
    std::vector<Colour> c2;

    friend bool operator==(const ColouringPair &, const ColouringPair &) = default;
};

enum class ViolationKind { ImproperC1, ImproperC2, NotOrthogonal };

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    Vertex u;
    Vertex v;

    friend bool operator==(const Violation &, const Violation &) = default;
};

struct VerificationReport {
    bool proper_c1 = true;
    bool proper_c2 = true;
    bool orthogonal = true;
    /// Set iff one of the flags is false. Properness of c1 is checked first,
    /// then c2, then orthogonality.
    std::optional<Violation> first_violation;

    bool ok() const { return proper_c1 && proper_c2 && orthogonal; }
};

/// True iff no edge of `g` is monochromatic under `colours`.
/// Throws `std::invalid_argument` unless `colours` covers every vertex.
bool is_proper(const Graph &g, std::span<const Colour> colours);

/// True iff `v -> (c1(v), c2(v))` is injective. `g` only fixes the vertex
/// count; orthogonality of a pair does not depend on the edges.
bool is_orthogonal(const Graph &g, const ColouringPair &pair);

VerificationReport verify(const Graph &g, const ColouringPair &pair);

/// Throws `std::invalid_argument` if `pair` is not total over `n` vertices or
/// uses a colour outside its palette.
void check_pair(std::size_t n, const ColouringPair &pair);

/// Number of distinct colours needed to relabel each colouring of `pair`
/// onto a dense range: max(#distinct c1, #distinct c2).
std::size_t colours_used(const ColouringPair &pair);

/// ceil(sqrt(n)): an orthogonal pair over N colours has at most N^2 distinct
/// colour pairs.
std::size_t clique_number_lower_bound(std::size_t n);

}  // namespace orthogrid
