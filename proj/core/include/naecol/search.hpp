#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "naecol/gadgets.hpp"

namespace naecol {

enum class SearchObjective : uint8_t { Vertices, Edges };

struct SearchOptions {
    int k = 3;
    /// Largest vertex count explored (canonical enumeration supports up to 11).
    int max_vertices = 7;
    SearchObjective objective = SearchObjective::Vertices;
    /// Threads used to extend and verify each level; the resulting report is
    /// identical for any worker count.
    int workers = 1;
    /// Budget on canonical graphs examined; 0 means unlimited. When the
    /// budget runs out mid-search the report carries a resume token. While a
    /// budget is set, verification runs single-threaded so the cut point is
    /// deterministic.
    uint64_t max_graphs = 0;
    /// When set, skip graphs that are disconnected, have no k-cycle, or whose
    /// candidate pair misses every k-cycle — all provably unable to certify.
    /// The false setting is the self-check reference path.
    bool prune = true;
    /// Resume token from a previous budget-interrupted report.
    std::string resume;
};

struct SearchReport {
    int k = 3;
    SearchObjective objective = SearchObjective::Vertices;
    int max_vertices = 0;
    /// True when every level up to max_vertices was either fully examined or
    /// made unnecessary by a smaller winner; false when the budget ran out.
    bool completed = false;
    /// Canonical graphs run through the verdict step (pruned ones included).
    uint64_t graphs_examined = 0;
    /// canonical_counts[i] = number of canonical graphs on i+1 vertices; a
    /// self-test hook, since these must match the published census of graphs
    /// up to isomorphism (1, 2, 4, 11, 34, 156, 1044 for 1..7 vertices).
    std::vector<uint64_t> canonical_counts;
    /// Set when max_graphs interrupted the search: "level=N;index=I;examined=E".
    std::string resume_token;
    double elapsed_seconds = 0.0;
    /// Recorded search assumptions (designated pairs must be edges, pruning
    /// rules in force).
    std::vector<std::string> notes;
};

struct SearchResult {
    /// Smallest certified super-edge gadget found, in canonical vertex
    /// labels. Ties: objective Vertices minimizes (vertices, edges, first
    /// certified edge in lexicographic edge order); Edges minimizes (edges,
    /// vertices, same edge order).
    std::optional<Gadget> gadget;
    SearchReport report;
};

/// Exhaustive search for the smallest super-edge gadget: streams every
/// canonical graph level by level (1, 2, ... max_vertices vertices), tests
/// each edge as the designated pair with the exhaustive verifier, and
/// re-verifies any winner independently. With objective Vertices the search
/// stops after the first level that certifies a gadget.
SearchResult search_min_gadget(const SearchOptions& options);
SearchResult search_min_gadget(int k, int max_vertices,
                               SearchObjective objective = SearchObjective::Vertices);

/// All canonical forms of graphs on n vertices (1 <= n <= 11), sorted. Built
/// by extending every canonical (n-1)-vertex graph with one new vertex over
/// all neighbor subsets, which reaches every n-vertex graph.
std::vector<uint64_t> enumerate_canonical_graphs(int n, int workers = 1);

}  // namespace naecol
