#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "naecol/canon.hpp"
#include "naecol/gadgets.hpp"
#include "naecol/graph.hpp"

using namespace naecol;

namespace {

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.num_vertices());
    for (const auto& [u, v] : g.edges()) out.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace

TEST_SUITE("canon") {

TEST_CASE("adjacency encoding by hand") {
    // Pair (i,j) with i<j sits at bit 63 - (j(j-1)/2 + i): (0,1) is the top
    // bit, then (0,2), (1,2), (0,3), ...
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(adjacency_bits(g) == (uint64_t{1} << 63));
    g.add_edge(1, 2);
    CHECK(adjacency_bits(g) == ((uint64_t{1} << 63) | (uint64_t{1} << 61)));

    const Graph back = graph_from_bits(adjacency_bits(g), 3);
    CHECK(back == g);

    CHECK(adjacency_bits(Graph(0)) == 0);
    CHECK(adjacency_bits(complete_graph(4)) == (~uint64_t{0} << 58));
}

TEST_CASE("encoding round-trips through graph_from_bits") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const Graph g = random_graph(n, rng);
        CHECK(graph_from_bits(adjacency_bits(g), n) == g);
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);  // 2..8
        const Graph g = random_graph(n, rng);
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabeled(g, perm);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(canonicalized(g) == canonicalized(h));
    }
}

TEST_CASE("distinct graphs keep distinct canonical forms") {
    // Path P4 and star K1,3 both have 4 vertices and 3 edges but are not
    // isomorphic (degree sequences 1,1,2,2 vs 1,1,1,3).
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(canonical_form(path) != canonical_form(star));
}

TEST_CASE("canonicalized output realizes the canonical form and is idempotent") {
    std::mt19937_64 rng(16180);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = random_graph(n, rng);
        const Graph c = canonicalized(g);
        CHECK(adjacency_bits(c) == canonical_form(g));
        CHECK(canonicalized(c) == c);
        CHECK(c.num_edges() == g.num_edges());
    }
}

TEST_CASE("bit-level canonical form agrees with the graph-level one") {
    std::mt19937_64 rng(979323);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = random_graph(n, rng);
        CHECK(canonical_form_bits(adjacency_bits(g), n) == canonical_form(g));
    }
}

TEST_CASE("the shortest chained loop is the complete graph on six vertices") {
    // Three K4 blocks chained into a loop share vertices so that the whole
    // graph collapses onto 6 vertices with every pair adjacent.
    const Gadget loop = k4_loop(3);
    REQUIRE(loop.graph.num_vertices() == 6);
    CHECK(canonical_form(loop.graph) == canonical_form(complete_graph(6)));
}

TEST_CASE("size limit") {
    CHECK_THROWS_AS(canonical_form(complete_graph(12)), std::invalid_argument);
    CHECK_THROWS_AS(adjacency_bits(complete_graph(12)), std::invalid_argument);
}

}  // TEST_SUITE
