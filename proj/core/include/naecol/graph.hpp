#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace naecol {

/// Simple undirected graph: no self-loops, no parallel edges, vertices
/// 0..num_vertices-1. Adjacency lists are kept sorted so that every
/// traversal in the library is deterministic.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int num_vertices);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return num_edges_; }

    bool has_edge(int u, int v) const;

    /// Adds edge {u,v}; throws std::invalid_argument on self-loops,
    /// out-of-range endpoints, or duplicates.
    void add_edge(int u, int v);

    /// Adds edge {u,v} unless it is already present.
    void ensure_edge(int u, int v);

    const std::vector<int>& neighbors(int v) const;

    /// All edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    void check_endpoints(int u, int v) const;

    int num_vertices_ = 0;
    int num_edges_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// A simple cycle in canonical orientation: the vertex sequence starts at the
/// cycle's smallest vertex and runs in the direction that makes the second
/// vertex smaller than the last, so each cycle has exactly one
/// representation.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices <=> b.vertices; }
};

/// Enumerates every simple cycle of exactly k vertices, each reported once in
/// canonical orientation, sorted lexicographically. Requires k >= 3.
std::vector<Cycle> enumerate_k_cycles(const Graph& graph, int k);

/// Streaming form of enumerate_k_cycles: invokes `visit` once per cycle with
/// the canonical vertex sequence (visitation order equals the sorted order of
/// enumerate_k_cycles) without materializing the whole list. The span passed
/// to `visit` is only valid during the call.
void for_each_k_cycle(const Graph& graph, int k,
                      const std::function<void(const std::vector<int>&)>& visit);

enum class Color : uint8_t { Red, Blue };

/// Total 2-coloring: colors[v] is vertex v's color.
struct Coloring {
    std::vector<Color> colors;

    int num_vertices() const { return static_cast<int>(colors.size()); }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// The same coloring with every color swapped.
Coloring flipped(const Coloring& coloring);

/// True when no k-cycle of `graph` is monochromatic under `coloring`.
/// Throws std::invalid_argument when the coloring is not total.
bool is_valid_coloring(const Graph& graph, int k, const Coloring& coloring);

/// Exhaustive search over all colorings with vertex 0 fixed red (valid by
/// color-flip symmetry). Returns the valid coloring with lexicographically
/// smallest color vector (Red < Blue), or nullopt. Throws
/// std::invalid_argument when num_vertices > max_vertices.
std::optional<Coloring> brute_force_coloring(const Graph& graph, int k, int max_vertices = 22);

/// True when the graph has one connected component (the empty graph counts
/// as connected).
bool is_connected(const Graph& graph);

/// K_n.
Graph complete_graph(int n);

}  // namespace naecol
