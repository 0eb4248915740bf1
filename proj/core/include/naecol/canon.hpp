#pragma once

#include <cstdint>

#include "naecol/graph.hpp"

namespace naecol {

/// Compact adjacency encoding for graphs with at most 11 vertices: pair
/// (i,j), i<j, occupies bit position 63 - (j*(j-1)/2 + i), so comparing the
/// raw integers compares adjacency strings lexicographically, column by
/// column.
uint64_t adjacency_bits(const Graph& graph);

/// Rebuilds a graph from its adjacency encoding.
Graph graph_from_bits(uint64_t bits, int num_vertices);

/// Canonical form: the minimum adjacency encoding over all vertex
/// relabelings, computed by branch-and-bound. Two graphs on the same number
/// of vertices are isomorphic iff their canonical forms are equal. Requires
/// num_vertices <= 11.
uint64_t canonical_form(const Graph& graph);
uint64_t canonical_form_bits(uint64_t bits, int num_vertices);

/// Canonical relabeling of the graph itself.
Graph canonicalized(const Graph& graph);

}  // namespace naecol
