#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "naecol/graph.hpp"

using namespace naecol;

namespace {

// Independent cycle oracle: tries every k-permutation that satisfies the
// canonical-orientation rules and checks cyclic adjacency directly. Written
// without reference to the library's pruned DFS so the two can disagree.
std::vector<std::vector<int>> oracle_k_cycles(const Graph& g, int k) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> found;
    std::vector<int> perm(static_cast<size_t>(k));
    std::vector<bool> used(static_cast<size_t>(n), false);

    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            if (!g.has_edge(perm.back(), perm.front())) return;
            if (perm[1] > perm.back()) return;  // one orientation per cycle
            found.push_back(perm);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)] || v <= perm[0]) continue;
            if (!g.has_edge(perm[static_cast<size_t>(depth) - 1], v)) continue;
            perm[static_cast<size_t>(depth)] = v;
            used[static_cast<size_t>(v)] = true;
            self(self, depth + 1);
            used[static_cast<size_t>(v)] = false;
        }
    };

    for (int start = 0; start < n; ++start) {
        perm[0] = start;
        used[static_cast<size_t>(start)] = true;
        extend(extend, 1);
        used[static_cast<size_t>(start)] = false;
    }
    std::sort(found.begin(), found.end());
    return found;
}

Graph random_graph(int n, int percent, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<int>(rng() % 100) < percent) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edge bookkeeping and validation") {
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(1, 3);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));

    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(2, 0), std::invalid_argument);
    g.ensure_edge(2, 0);  // duplicate via ensure is a no-op
    CHECK(g.num_edges() == 2);

    g.add_edge(0, 3);
    g.add_edge(0, 1);
    const std::vector<int> expected = {1, 2, 3};
    CHECK(g.neighbors(0) == expected);  // kept sorted

    const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 3}};
    CHECK(g.edges() == edges);
}

TEST_CASE("cycle enumeration matches an independent oracle") {
    std::mt19937_64 rng(20260815);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);  // 4..8
        const int percent = 30 + static_cast<int>(rng() % 55);
        const Graph g = random_graph(n, percent, rng);
        for (int k = 3; k <= std::min(n, 6); ++k) {
            const auto expected = oracle_k_cycles(g, k);
            const auto got = enumerate_k_cycles(g, k);
            REQUIRE(got.size() == expected.size());
            for (size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].vertices == expected[i]);
            }
        }
    }
}

TEST_CASE("streaming enumeration visits the same cycles in the same order") {
    std::mt19937_64 rng(42);
    const Graph g = random_graph(8, 55, rng);
    for (int k = 3; k <= 6; ++k) {
        const auto listed = enumerate_k_cycles(g, k);
        std::vector<std::vector<int>> streamed;
        for_each_k_cycle(g, k, [&](const std::vector<int>& c) { streamed.push_back(c); });
        REQUIRE(streamed.size() == listed.size());
        for (size_t i = 0; i < listed.size(); ++i) CHECK(streamed[i] == listed[i].vertices);
    }
}

TEST_CASE("cycle canonical orientation") {
    const Graph g = complete_graph(5);
    for (const Cycle& c : enumerate_k_cycles(g, 4)) {
        const auto& v = c.vertices;
        CHECK(*std::min_element(v.begin(), v.end()) == v.front());
        CHECK(v[1] < v.back());
    }
    CHECK_THROWS_AS(enumerate_k_cycles(g, 2), std::invalid_argument);
}

TEST_CASE("closed-form cycle counts on complete graphs") {
    // C(n,k) * (k-1)!/2 distinct k-cycles in K_n.
    CHECK(enumerate_k_cycles(complete_graph(6), 3).size() == 20);
    CHECK(enumerate_k_cycles(complete_graph(6), 4).size() == 45);
    CHECK(enumerate_k_cycles(complete_graph(6), 5).size() == 72);
    CHECK(enumerate_k_cycles(complete_graph(6), 6).size() == 60);
    CHECK(enumerate_k_cycles(complete_graph(5), 5).size() == 12);
}

TEST_CASE("coloring validity") {
    Graph triangle(3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);

    Coloring all_red{{Color::Red, Color::Red, Color::Red}};
    CHECK_FALSE(is_valid_coloring(triangle, 3, all_red));
    Coloring mixed{{Color::Red, Color::Red, Color::Blue}};
    CHECK(is_valid_coloring(triangle, 3, mixed));
    CHECK(is_valid_coloring(triangle, 4, all_red));  // no 4-cycles to violate

    Coloring partial{{Color::Red, Color::Red}};
    CHECK_THROWS_AS(is_valid_coloring(triangle, 3, partial), std::invalid_argument);
}

TEST_CASE("flip is an involution that preserves validity") {
    std::mt19937_64 rng(7);
    const Graph g = random_graph(7, 60, rng);
    Coloring c;
    for (int v = 0; v < 7; ++v) c.colors.push_back(rng() & 1 ? Color::Red : Color::Blue);
    CHECK(flipped(flipped(c)) == c);
    CHECK(is_valid_coloring(g, 3, c) == is_valid_coloring(g, 3, flipped(c)));
}

TEST_CASE("brute-force coloring search") {
    // In a complete graph any 3 same-colored vertices form a monochromatic
    // triangle, so K5 and up are uncolorable at k=3 (pigeonhole: one class
    // has >= 3 of the 5 vertices) while K4 splits 2+2.
    CHECK_FALSE(brute_force_coloring(complete_graph(6), 3).has_value());
    CHECK_FALSE(brute_force_coloring(complete_graph(5), 3).has_value());

    const auto witness = brute_force_coloring(complete_graph(4), 3);
    REQUIRE(witness.has_value());
    CHECK(witness->colors[0] == Color::Red);
    CHECK(is_valid_coloring(complete_graph(4), 3, *witness));

    // Lexicographic minimality: the all-red coloring is valid on an empty
    // graph and smallest.
    const auto trivial = brute_force_coloring(Graph(3), 3);
    REQUIRE(trivial.has_value());
    CHECK(trivial->colors == std::vector<Color>(3, Color::Red));

    CHECK_THROWS_AS(brute_force_coloring(Graph(23), 3), std::invalid_argument);
}

TEST_CASE("connectivity") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(is_connected(path));

    Graph split(3);
    split.add_edge(0, 1);
    CHECK_FALSE(is_connected(split));

    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
}

}  // TEST_SUITE
