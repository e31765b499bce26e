#include "orthogrid/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthogrid {

namespace {

constexpr int kUnset = -1;

// Vertices ordered so that each one has as many already-placed neighbours as
// possible; ties go to higher degree, then lower id.
std::vector<Vertex> search_order(const Graph &g) {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> back_degree(n, 0);
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v])
                continue;
            if (best == n || back_degree[v] > back_degree[best] ||
                (back_degree[v] == back_degree[best] &&
                 g.degree(static_cast<Vertex>(v)) > g.degree(static_cast<Vertex>(best))))
                best = v;
        }
        placed[best] = true;
        order.push_back(static_cast<Vertex>(best));
        for (Vertex w : g.neighbours(static_cast<Vertex>(best)))
            ++back_degree[w];
    }
    return order;
}

class PairSearch {
public:
    PairSearch(const Graph &g, std::size_t palette)
        : g_(g), palette_(palette), order_(search_order(g)), c1_(g.num_vertices(), kUnset),
          c2_(g.num_vertices(), kUnset), pair_used_(palette * palette, false) {}

    bool run() { return place(0, -1, -1); }

    ColouringPair result() const {
        ColouringPair p;
        p.palette_size = palette_;
        p.c1.assign(c1_.begin(), c1_.end());
        p.c2.assign(c2_.begin(), c2_.end());
        return p;
    }

private:
    // Colours are interchangeable within each colouring independently, so
    // the next vertex never needs a colour above the running maximum + 1.
    bool place(std::size_t depth, int max1, int max2) {
        if (depth == order_.size())
            return true;

        const Vertex v = order_[depth];
        std::vector<bool> blocked1(palette_, false), blocked2(palette_, false);
        for (Vertex w : g_.neighbours(v)) {
            if (c1_[w] != kUnset) {
                blocked1[static_cast<std::size_t>(c1_[w])] = true;
                blocked2[static_cast<std::size_t>(c2_[w])] = true;
            }
        }

        const int limit1 = std::min(max1 + 1, static_cast<int>(palette_) - 1);
        const int limit2 = std::min(max2 + 1, static_cast<int>(palette_) - 1);
        for (int a = 0; a <= limit1; ++a) {
            if (blocked1[static_cast<std::size_t>(a)])
                continue;
            for (int b = 0; b <= limit2; ++b) {
                const std::size_t key = static_cast<std::size_t>(a) * palette_ + static_cast<std::size_t>(b);
                if (blocked2[static_cast<std::size_t>(b)] || pair_used_[key])
                    continue;
                c1_[v] = a;
                c2_[v] = b;
                pair_used_[key] = true;
                if (place(depth + 1, std::max(max1, a), std::max(max2, b)))
                    return true;
                pair_used_[key] = false;
                c1_[v] = kUnset;
                c2_[v] = kUnset;
            }
        }
        return false;
    }

    const Graph &g_;
    std::size_t palette_;
    std::vector<Vertex> order_;
    std::vector<int> c1_;
    std::vector<int> c2_;
    std::vector<bool> pair_used_;
};

void check_guard(const Graph &g, std::size_t guard) {
    if (g.num_vertices() > guard)
        throw std::invalid_argument("oracle: graph has " + std::to_string(g.num_vertices()) +
                                    " vertices, guard is " + std::to_string(guard));
}

}  // namespace

std::optional<ColouringPair> find_orthogonal_colouring(const Graph &g, std::size_t palette,
                                                       std::size_t guard) {
    check_guard(g, guard);
    const std::size_t n = g.num_vertices();
    if (n == 0)
        return ColouringPair{palette, {}, {}};
    if (palette == 0 || palette * palette < n)
        return std::nullopt;

    PairSearch search(g, palette);
    if (!search.run())
        return std::nullopt;
    return search.result();
}

std::optional<std::size_t> brute_force_ochi(const Graph &g, std::size_t max_colours, std::size_t guard) {
    check_guard(g, guard);
    const std::size_t n = g.num_vertices();
    if (n == 0)
        return 0;
    for (std::size_t palette = clique_number_lower_bound(n); palette <= max_colours; ++palette) {
        if (find_orthogonal_colouring(g, palette, guard))
            return palette;
    }
    return std::nullopt;
}

}  // namespace orthogrid
