#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "orthogrid/clique_grid.hpp"
#include "orthogrid/oracle.hpp"
#include "support/oracles.hpp"

using namespace orthogrid;

TEST_CASE("build_H matches the H(9,1,2) drawing") {
    const Graph h = build_H({9, 1, 2});
    CHECK(h.num_vertices() == 18);
    // v_0^0 ~ v_1^1, v_0^0 !~ v_2^0, and each clique is complete.
    CHECK(h.adjacent(h_vertex({9, 1, 2}, 0, 0), h_vertex({9, 1, 2}, 1, 1)));
    CHECK_FALSE(h.adjacent(h_vertex({9, 1, 2}, 0, 0), h_vertex({9, 1, 2}, 2, 0)));
    CHECK(h.adjacent(0, 1));
    // End cliques see 3 others, inner cliques 5.
    CHECK(h.degree(0) == 3);
    CHECK(h.degree(8) == 5);
    CHECK(h.num_edges() == 9 * 1 + 8 * 4);
}

TEST_CASE("build_H degenerates to cliques") {
    const Graph k4 = build_H({1, 1, 4});
    CHECK(k4.num_edges() == 6);
    const Graph k3 = build_H({3, 2, 1});
    CHECK(k3.num_edges() == 3);
    CHECK_THROWS_AS(build_H({0, 1, 1}), std::invalid_argument);
}

TEST_CASE("classify_case boundaries") {
    CHECK(classify_case({9, 1, 2}) == TheoremCase::Case3);
    CHECK(classify_case({4, 1, 2}) == TheoremCase::Case1);
    CHECK(classify_case({5, 1, 2}) == TheoremCase::Case2);
    CHECK(classify_case({8, 1, 2}) == TheoremCase::Case2);
}

TEST_CASE("ochi_H closed forms") {
    CHECK(ochi_H({9, 1, 2}) == 5);
    CHECK(ochi_H({4, 1, 2}) == 4);
    CHECK(ochi_H({8, 1, 2}) == 5);
    CHECK(ochi_H({1, 1, 1}) == 2);
}

TEST_CASE("colour_H on H(9,1,2) evaluates the case-3 formulas") {
    const HParams p{9, 1, 2};
    const ColouringPair pair = colour_H(p);
    CHECK(pair.palette_size == 5);
    const Vertex v = h_vertex(p, 4, 1);  // j + it = 9
    CHECK(pair.c1[v] == 4);
    CHECK(pair.c2[v] == 0);
    CHECK(verify(build_H(p), pair).ok());
}

TEST_CASE("colour_H on trivial and case-1 instances") {
    const ColouringPair single = colour_H({1, 1, 1});
    CHECK(single.palette_size == 2);
    CHECK(single.c1 == std::vector<Colour>{0});
    CHECK(single.c2 == std::vector<Colour>{0});

    const HParams p{4, 1, 2};
    const ColouringPair pair = colour_H(p);
    CHECK(pair.palette_size == 4);
    CHECK(verify(build_H(p), pair).ok());
    CHECK(brute_force_ochi(build_H(p), 4) == 4);
}

TEST_CASE("the shifted-block case-2 colouring is not proper") {
    // c1 = (j+it) mod N, c2 = ((j+it) mod N + floor(i/(d+1))) mod (N+1) on H(3,1,1).
    const Graph p3 = build_H({3, 1, 1});
    const ColouringPair shifted{3, {0, 1, 0}, {0, 1, 1}};
    CHECK_FALSE(verify(p3, shifted).proper_c2);

    const ColouringPair used = colour_H({3, 1, 1});
    CHECK(used.palette_size == 3);
    CHECK(verify(p3, used).ok());
}

TEST_CASE("colour_H verifies across a sweep of small parameters") {
    for (std::size_t m = 1; m <= 12; ++m) {
        for (std::size_t d = 1; d <= 3; ++d) {
            for (std::size_t t = 1; t <= 4; ++t) {
                const HParams p{m, d, t};
                const ColouringPair pair = colour_H(p);
                const Graph h = build_H(p);
                CAPTURE(m);
                CAPTURE(d);
                CAPTURE(t);
                CHECK(pair.palette_size == ochi_H(p));
                CHECK(verify(h, pair).ok());
                CHECK(testing::pairs_distinct(pair));
            }
        }
    }
}

TEST_CASE("case 3 with mt a perfect square uses exactly sqrt(mt) colours") {
    for (const HParams p : {HParams{9, 1, 1}, HParams{8, 1, 2}, HParams{18, 1, 2}, HParams{25, 1, 1},
                            HParams{27, 1, 3}, HParams{49, 2, 4}}) {
        if (classify_case(p) != TheoremCase::Case3)
            continue;
        const ColouringPair pair = colour_H(p);
        std::size_t root = clique_number_lower_bound(p.m * p.t);
        REQUIRE(root * root == p.m * p.t);
        CHECK(pair.palette_size == root);
        CHECK(colours_used(pair) == root);
        CHECK(verify(build_H(p), pair).ok());
    }
}

TEST_CASE("case 1 and case 2 are tight against the oracle") {
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t d = 1; d <= 2; ++d) {
            for (std::size_t t = 1; t <= 2; ++t) {
                const HParams p{m, d, t};
                if (m * t > 12 || m <= d)
                    continue;
                CAPTURE(m);
                CAPTURE(d);
                CAPTURE(t);
                CHECK(brute_force_ochi(build_H(p), ochi_H(p)) == ochi_H(p));
            }
        }
    }
}

TEST_CASE("strong_product small cases") {
    const Graph k2 = build_H({1, 1, 2});
    const Graph k4 = strong_product(k2, k2);
    CHECK(k4.num_vertices() == 4);
    CHECK(k4.num_edges() == 6);

    const Graph p3 = build_H({3, 1, 1});
    CHECK(strong_product(p3, Graph(1)) == p3);
    CHECK(strong_product(Graph(1), p3) == p3);
}

TEST_CASE("L(25,1,1) is the 5x5 king graph") {
    const HParams p{5, 1, 1};
    const Graph l = build_L(p);
    CHECK(l == strong_product(build_H(p), build_H(p)));
    CHECK(l.num_vertices() == 25);
    for (std::size_t row = 0; row < 5; ++row) {
        for (std::size_t col = 0; col < 5; ++col) {
            const bool row_edge = row == 0 || row == 4;
            const bool col_edge = col == 0 || col == 4;
            const std::size_t want = row_edge && col_edge ? 3 : (row_edge || col_edge ? 5 : 8);
            CHECK(l.degree(static_cast<Vertex>(row * 5 + col)) == want);
        }
    }
}

TEST_CASE("build_L clique rule agrees with the strong product") {
    CHECK(build_L({1, 1, 2}).num_edges() == 6);
    for (std::size_t m = 1; m <= 4; ++m) {
        for (std::size_t d = 1; d <= 2; ++d) {
            for (std::size_t t = 1; t <= 2; ++t) {
                const HParams p{m, d, t};
                CAPTURE(m);
                CAPTURE(d);
                CAPTURE(t);
                CHECK(build_L(p) == strong_product(build_H(p), build_H(p)));
            }
        }
    }
}

TEST_CASE("L(36,1,4) adjacency follows the clique rule") {
    const HParams p{3, 1, 2};
    const Graph l = build_L(p);
    CHECK(l.num_vertices() == 36);
    CHECK_FALSE(l.adjacent(l_vertex(p, 0, 0, 0), l_vertex(p, 2, 0, 0)));
    CHECK(l.adjacent(l_vertex(p, 0, 0, 0), l_vertex(p, 1, 1, 3)));
    for (Vertex a = 0; a < 36; ++a) {
        for (Vertex b = 0; b < 36; ++b) {
            CHECK(l.adjacent(a, b) == testing::l_rule(3, 1, 2, a, b));
            CHECK(l_adjacent(p, a, b) == testing::l_rule(3, 1, 2, a, b));
        }
    }
}

TEST_CASE("l_vertex and l_cell are consistent") {
    const HParams p{4, 2, 3};
    std::vector<bool> seen(static_cast<std::size_t>(p.m * p.m * p.t * p.t), false);
    for (std::size_t i = 0; i < p.m; ++i) {
        for (std::size_t j = 0; j < p.m; ++j) {
            for (std::size_t s = 0; s < p.t * p.t; ++s) {
                const Vertex v = l_vertex(p, i, j, s);
                REQUIRE(v < seen.size());
                CHECK_FALSE(seen[v]);
                seen[v] = true;
                CHECK(l_cell(p, v).i == i);
                CHECK(l_cell(p, v).j == j);
            }
        }
    }
}

TEST_CASE("compose_orthogonal on named products") {
    const ColouringPair unit{1, {0}, {0}};
    CHECK(compose_orthogonal(unit, unit) == unit);

    const HParams five{5, 1, 1};
    const ColouringPair h5 = colour_H(five);
    CHECK(h5.palette_size == 3);
    const ColouringPair l25 = compose_orthogonal(h5, h5);
    CHECK(l25.palette_size == 9);
    CHECK(verify(build_L(five), l25).ok());
    CHECK(testing::pairs_distinct(l25));

    const HParams nine{9, 1, 2};
    const ColouringPair l81 = compose_orthogonal(colour_H(nine), colour_H(nine));
    CHECK(l81.palette_size == 25);
    CHECK(l81.c1.size() == 324);
    CHECK(verify(build_L(nine), l81).ok());
}

TEST_CASE("compose_orthogonal preserves verification on random factors") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 40; ++round) {
        const Graph g = testing::random_graph(1 + rng() % 6, 0.5, rng);
        const Graph h = testing::random_graph(1 + rng() % 6, 0.5, rng);
        auto ng = brute_force_ochi(g, g.num_vertices());
        auto nh = brute_force_ochi(h, h.num_vertices());
        REQUIRE(ng);
        REQUIRE(nh);
        const auto pg = testing::scramble(*find_orthogonal_colouring(g, *ng), rng);
        const auto ph = testing::scramble(*find_orthogonal_colouring(h, *nh), rng);
        CHECK(verify(strong_product(g, h), compose_orthogonal(pg, ph)).ok());
    }
}

TEST_CASE("ochi_L_upper is ochi_H squared") {
    CHECK(ochi_L_upper({5, 1, 1}) == 9);
    CHECK(ochi_L_upper({4, 1, 2}) == 16);
    CHECK(ochi_L_upper({8, 1, 2}) == 25);
    for (std::size_t m = 1; m <= 30; ++m)
        for (std::size_t d = 1; d <= 4; ++d)
            for (std::size_t t = 1; t <= 5; ++t)
                CHECK(ochi_L_upper({m, d, t}) == ochi_H({m, d, t}) * ochi_H({m, d, t}));
}

TEST_CASE("vertex count overflow is reported") {
    CHECK_THROWS_AS(build_H({1u << 20, 1, 1u << 13}), std::overflow_error);
    CHECK_THROWS_AS(build_L({1u << 10, 1, 1u << 10}), std::overflow_error);
}
