#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "naecol/formula.hpp"
#include "naecol/gadgets.hpp"
#include "naecol/graph.hpp"

namespace naecol {

enum class ReductionVariant : uint8_t { Basic, Necklace };

struct ReductionStats {
    int variable_gadgets = 0;
    int clause_gadgets = 0;
    int occurrence_gadgets = 0;
    int num_vertices = 0;
    int num_edges = 0;

    friend bool operator==(const ReductionStats&, const ReductionStats&) = default;
};

/// Output of the NAE-SAT to coloring reduction. The formula is
/// NAE-satisfiable iff `graph` admits a 2-coloring with no monochromatic
/// k-cycle.
struct ReductionOutput {
    int k = 3;
    ReductionVariant variant = ReductionVariant::Basic;
    Graph graph;
    /// literal_vertices[v-1][0] / [1]: the vertices standing for variable v
    /// and its negation; they form a super-edge pair, so they take opposite
    /// colors in every valid coloring.
    std::vector<std::array<int, 2>> literal_vertices;
    /// slot_vertices[c][t]: clause c's cycle vertex for its t-th literal. A
    /// super-edge joins it to the matching literal vertex, so each slot
    /// carries the negation of its literal's color.
    std::vector<std::vector<int>> slot_vertices;
    ReductionStats stats;
};

/// Reduces a width-normalized formula (every clause exactly k literals; use
/// pad_to_width first) to a graph: one super-edge gadget per variable, one
/// k-cycle per clause, and one super-edge gadget joining each clause slot to
/// its same-sign literal vertex. Uses k4_loop(5) gadgets for k=3 and
/// tree_gadget(k) for k>=4.
ReductionOutput reduce(const Formula& formula, int k);

/// k=3 variant sharing one k4_loop(2n+1) across all variables: variable i's
/// literal pair is the juncture edge between blocks 2i and 2i+1. Requires at
/// least 2 variables.
ReductionOutput reduce_necklace(const Formula& formula);

/// Reads a variable assignment off a valid coloring of the reduction graph:
/// variable v is true iff its positive literal vertex is red.
Assignment extract_assignment(const ReductionOutput& reduction, const Coloring& coloring);

/// Size prediction for a reduction instance: the published closed-form
/// counts next to counts derived from the constructions in this library.
/// The two disagree where the published formulas are known to be off; the
/// flags make that visible.
struct SizePrediction {
    long long edges_published = 0;
    long long vertices_published = 0;
    long long edges_derived = 0;
    long long vertices_derived = 0;

    bool edges_match() const { return edges_published == edges_derived; }
    bool vertices_match() const { return vertices_published == vertices_derived; }
};

SizePrediction predicted_sizes(int k, int num_variables, int num_clauses,
                               ReductionVariant variant);

/// (edges, vertices) of one tree gadget as built by this library, in closed
/// form (k >= 4).
std::pair<long long, long long> tree_gadget_size_derived(int k);

/// (edges, vertices) of one tree gadget according to the published general
/// formula (k >= 4). Known not to match the built gadget.
std::pair<long long, long long> tree_gadget_size_published(int k);

}  // namespace naecol
