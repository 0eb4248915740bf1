#include <algorithm>
#include <vector>

#include <doctest.h>

#include "naecol/canon.hpp"
#include "naecol/gadgets.hpp"
#include "naecol/graph.hpp"
#include "naecol/search.hpp"

using namespace naecol;

namespace {

// Counts the valid colorings of a small gadget directly, bit by bit,
// independent of the library's verifier.
uint64_t count_valid_colorings(const Graph& g, int k) {
    const int n = g.num_vertices();
    uint64_t valid = 0;
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
        Coloring c;
        for (int v = 0; v < n; ++v) c.colors.push_back((bits >> v) & 1u ? Color::Red : Color::Blue);
        if (is_valid_coloring(g, k, c)) ++valid;
    }
    return valid;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("canonical census matches the published sequence") {
    const std::vector<uint64_t> expected = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        const auto forms = enumerate_canonical_graphs(n);
        CHECK(forms.size() == expected[static_cast<size_t>(n) - 1]);
        CHECK(std::is_sorted(forms.begin(), forms.end()));
        CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
        // Spot-check: every entry is its own canonical form.
        for (size_t i = 0; i < forms.size(); i += 37) {
            CHECK(canonical_form_bits(forms[i], n) == forms[i]);
        }
    }
}

TEST_CASE("worker count does not change the enumeration") {
    CHECK(enumerate_canonical_graphs(6, 2) == enumerate_canonical_graphs(6, 1));
    CHECK(enumerate_canonical_graphs(7, 3) == enumerate_canonical_graphs(7, 1));
}

TEST_CASE("no certified pair exists on six or fewer vertices") {
    const SearchResult result = search_min_gadget(3, 6);
    CHECK_FALSE(result.gadget.has_value());
    CHECK(result.report.completed);
    CHECK(result.report.graphs_examined == 208);  // 1+2+4+11+34+156
    CHECK(result.report.canonical_counts == std::vector<uint64_t>{1, 2, 4, 11, 34, 156});
    CHECK(result.report.resume_token.empty());
}

TEST_CASE("seven vertices admit a minimum gadget, which re-verifies independently") {
    const SearchResult result = search_min_gadget(3, 7);
    REQUIRE(result.gadget.has_value());
    CHECK(result.report.completed);
    CHECK(result.report.graphs_examined == 1252);
    CHECK(result.report.canonical_counts.back() == 1044);

    const Gadget& g = *result.gadget;
    CHECK(g.k == 3);
    CHECK(g.graph.num_vertices() == 7);
    CHECK(g.graph.num_edges() == 16);
    CHECK(g.graph.has_edge(g.x, g.y));

    // Independent re-verification: enumerate all 128 colorings.
    uint64_t valid = 0;
    bool pair_forced = true;
    for (uint32_t bits = 0; bits < (1u << 7); ++bits) {
        Coloring c;
        for (int v = 0; v < 7; ++v) c.colors.push_back((bits >> v) & 1u ? Color::Red : Color::Blue);
        if (!is_valid_coloring(g.graph, 3, c)) continue;
        ++valid;
        if (c.colors[static_cast<size_t>(g.x)] == c.colors[static_cast<size_t>(g.y)]) {
            pair_forced = false;
        }
    }
    CHECK(valid == 2);
    CHECK(pair_forced);
    CHECK(count_valid_colorings(g.graph, 3) == 2);
}

TEST_CASE("edge objective agrees with the vertex objective at this size") {
    const SearchResult by_edges = search_min_gadget(3, 7, SearchObjective::Edges);
    REQUIRE(by_edges.gadget.has_value());
    CHECK(by_edges.gadget->graph.num_edges() == 16);
    CHECK(by_edges.gadget->graph.num_vertices() == 7);
}

TEST_CASE("disabling the prune rules changes nothing but the work done") {
    SearchOptions pruned;
    pruned.k = 3;
    pruned.max_vertices = 6;
    SearchOptions reference = pruned;
    reference.prune = false;
    const SearchResult a = search_min_gadget(pruned);
    const SearchResult b = search_min_gadget(reference);
    CHECK(a.gadget.has_value() == b.gadget.has_value());
    CHECK(a.report.graphs_examined == b.report.graphs_examined);
    CHECK(a.report.canonical_counts == b.report.canonical_counts);
}

TEST_CASE("a graph budget pauses the search and a resume token finishes it") {
    SearchOptions uninterrupted;
    uninterrupted.k = 3;
    uninterrupted.max_vertices = 6;
    const SearchResult full = search_min_gadget(uninterrupted);

    SearchOptions budgeted = uninterrupted;
    budgeted.max_graphs = 50;
    const SearchResult part1 = search_min_gadget(budgeted);
    CHECK_FALSE(part1.report.completed);
    CHECK(part1.report.graphs_examined == 50);
    REQUIRE_FALSE(part1.report.resume_token.empty());

    SearchOptions rest = uninterrupted;
    rest.resume = part1.report.resume_token;
    const SearchResult part2 = search_min_gadget(rest);
    CHECK(part2.report.completed);
    CHECK(part2.gadget.has_value() == full.gadget.has_value());
    // The resumed report carries the cumulative count, so finishing the
    // interrupted run must land exactly on the uninterrupted total.
    CHECK(part2.report.graphs_examined == full.report.graphs_examined);
}

TEST_CASE("multi-worker search returns the identical winner") {
    SearchOptions options;
    options.k = 3;
    options.max_vertices = 7;
    options.workers = 2;
    const SearchResult parallel = search_min_gadget(options);
    const SearchResult serial = search_min_gadget(3, 7);
    REQUIRE(parallel.gadget.has_value());
    REQUIRE(serial.gadget.has_value());
    CHECK(parallel.gadget->graph == serial.gadget->graph);
    CHECK(parallel.gadget->x == serial.gadget->x);
    CHECK(parallel.gadget->y == serial.gadget->y);
    CHECK(parallel.report.graphs_examined == serial.report.graphs_examined);
}

TEST_CASE("option validation") {
    SearchOptions bad;
    bad.k = 3;
    bad.max_vertices = 12;
    CHECK_THROWS_AS(search_min_gadget(bad), std::invalid_argument);
    bad.max_vertices = 0;
    CHECK_THROWS_AS(search_min_gadget(bad), std::invalid_argument);
    SearchOptions bad_resume;
    bad_resume.k = 3;
    bad_resume.max_vertices = 6;
    bad_resume.resume = "level=;garbage";
    CHECK_THROWS_AS(search_min_gadget(bad_resume), std::invalid_argument);
}

}  // TEST_SUITE
