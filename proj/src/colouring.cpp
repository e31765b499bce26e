#include "orthogrid/colouring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace orthogrid {

namespace {

void check_total(std::size_t n, std::size_t got, std::string_view what) {
    if (got != n)
        throw std::invalid_argument(std::string(what) + ": colouring covers " + std::to_string(got) +
                                    " vertices, graph has " + std::to_string(n));
}

std::optional<Edge> first_monochromatic(const Graph &g, std::span<const Colour> colours) {
    const std::size_t n = g.num_vertices();
    for (std::size_t u = 0; u < n; ++u) {
        for (Vertex v : g.neighbours(static_cast<Vertex>(u))) {
            if (v > u && colours[u] == colours[v])
                return Edge{static_cast<Vertex>(u), v};
        }
    }
    return std::nullopt;
}

std::optional<Edge> first_repeated_pair(const ColouringPair &pair) {
    const std::size_t n = pair.c1.size();
    std::vector<std::uint64_t> keyed(n);
    for (std::size_t v = 0; v < n; ++v)
        keyed[v] = (static_cast<std::uint64_t>(pair.c1[v]) << 32) | pair.c2[v];

    std::vector<Vertex> order(n);
    for (std::size_t v = 0; v < n; ++v)
        order[v] = static_cast<Vertex>(v);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return keyed[a] != keyed[b] ? keyed[a] < keyed[b] : a < b;
    });

    std::optional<Edge> best;
    for (std::size_t k = 1; k < n; ++k) {
        if (keyed[order[k - 1]] == keyed[order[k]]) {
            Edge e{order[k - 1], order[k]};
            if (!best || e < *best)
                best = e;
        }
    }
    return best;
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::ImproperC1:
        return "improper_c1";
    case ViolationKind::ImproperC2:
        return "improper_c2";
    case ViolationKind::NotOrthogonal:
        return "not_orthogonal";
    }
    return "unknown";
}

bool is_proper(const Graph &g, std::span<const Colour> colours) {
    check_total(g.num_vertices(), colours.size(), "is_proper");
    return !first_monochromatic(g, colours);
}

void check_pair(std::size_t n, const ColouringPair &pair) {
    check_total(n, pair.c1.size(), "c1");
    check_total(n, pair.c2.size(), "c2");
    auto in_palette = [&](Colour c) { return c < pair.palette_size; };
    if (!std::all_of(pair.c1.begin(), pair.c1.end(), in_palette) ||
        !std::all_of(pair.c2.begin(), pair.c2.end(), in_palette))
        throw std::invalid_argument("colouring uses a colour outside palette of size " +
                                    std::to_string(pair.palette_size));
}

bool is_orthogonal(const Graph &g, const ColouringPair &pair) {
    check_pair(g.num_vertices(), pair);
    return !first_repeated_pair(pair);
}

VerificationReport verify(const Graph &g, const ColouringPair &pair) {
    check_pair(g.num_vertices(), pair);

    VerificationReport report;
    auto bad1 = first_monochromatic(g, pair.c1);
    auto bad2 = first_monochromatic(g, pair.c2);
    auto repeat = first_repeated_pair(pair);
    report.proper_c1 = !bad1;
    report.proper_c2 = !bad2;
    report.orthogonal = !repeat;

    if (bad1)
        report.first_violation = Violation{ViolationKind::ImproperC1, bad1->u, bad1->v};
    else if (bad2)
        report.first_violation = Violation{ViolationKind::ImproperC2, bad2->u, bad2->v};
    else if (repeat)
        report.first_violation = Violation{ViolationKind::NotOrthogonal, repeat->u, repeat->v};
    return report;
}

std::size_t colours_used(const ColouringPair &pair) {
    auto distinct = [](std::vector<Colour> c) {
        std::sort(c.begin(), c.end());
        return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
    };
    return std::max(distinct(pair.c1), distinct(pair.c2));
}

std::size_t clique_number_lower_bound(std::size_t n) {
    auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (root * root > n)
        --root;
    while (root * root < n)
        ++root;
    return root;
}

}  // namespace orthogrid
