#include "naecol/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace naecol {

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
    if (num_vertices < 0) {
        throw std::invalid_argument("Graph: negative vertex count");
    }
    adj_.resize(static_cast<size_t>(num_vertices));
}

void Graph::check_endpoints(int u, int v) const {
    if (u < 0 || u >= num_vertices_ || v < 0 || v >= num_vertices_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    }
}

bool Graph::has_edge(int u, int v) const {
    check_endpoints(u, v);
    const std::vector<int>& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void Graph::add_edge(int u, int v) {
    if (has_edge(u, v)) {
        throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    }
    auto insert_sorted = [](std::vector<int>& nbrs, int w) {
        nbrs.insert(std::lower_bound(nbrs.begin(), nbrs.end(), w), w);
    };
    insert_sorted(adj_[static_cast<size_t>(u)], v);
    insert_sorted(adj_[static_cast<size_t>(v)], u);
    ++num_edges_;
}

void Graph::ensure_edge(int u, int v) {
    if (!has_edge(u, v)) add_edge(u, v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= num_vertices_) {
        throw std::invalid_argument("vertex out of range");
    }
    return adj_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<size_t>(num_edges_));
    for (int u = 0; u < num_vertices_; ++u) {
        for (int v : adj_[static_cast<size_t>(u)]) {
            if (v > u) result.emplace_back(u, v);
        }
    }
    return result;
}

namespace {

// Breadth-first distances from `start` inside the subgraph induced by
// vertices >= start; -1 marks unreachable vertices. Used to prune cycle
// search branches that cannot return to the start in the remaining steps.
std::vector<int> bfs_distances_from(const Graph& graph, int start) {
    std::vector<int> dist(static_cast<size_t>(graph.num_vertices()), -1);
    std::queue<int> queue;
    dist[static_cast<size_t>(start)] = 0;
    queue.push(start);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : graph.neighbors(u)) {
            if (v < start) continue;
            if (dist[static_cast<size_t>(v)] == -1) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

struct CycleDfs {
    const Graph& graph;
    int k;
    int start;
    const std::vector<int>& dist;
    std::vector<int> path;
    std::vector<char> on_path;
    const std::function<void(const std::vector<int>&)>& visit;

    void run(int u) {
        const int depth = static_cast<int>(path.size());
        if (depth == k) {
            if (graph.has_edge(u, start) && path[1] < path[static_cast<size_t>(k) - 1]) {
                visit(path);
            }
            return;
        }
        const int remaining = k - depth;
        for (int v : graph.neighbors(u)) {
            if (v <= start || on_path[static_cast<size_t>(v)]) continue;
            int d = dist[static_cast<size_t>(v)];
            if (d == -1 || d > remaining) continue;
            path.push_back(v);
            on_path[static_cast<size_t>(v)] = 1;
            run(v);
            on_path[static_cast<size_t>(v)] = 0;
            path.pop_back();
        }
    }
};

}  // namespace

void for_each_k_cycle(const Graph& graph, int k,
                      const std::function<void(const std::vector<int>&)>& visit) {
    if (k < 3) {
        throw std::invalid_argument("enumerate_k_cycles: k must be at least 3");
    }
    const int n = graph.num_vertices();
    for (int start = 0; start < n; ++start) {
        std::vector<int> dist = bfs_distances_from(graph, start);
        CycleDfs dfs{graph,  k, start, dist, {start}, std::vector<char>(static_cast<size_t>(n), 0),
                     visit};
        dfs.on_path[static_cast<size_t>(start)] = 1;
        dfs.run(start);
    }
}

std::vector<Cycle> enumerate_k_cycles(const Graph& graph, int k) {
    std::vector<Cycle> cycles;
    // The DFS explores starts in increasing order and neighbor lists in
    // sorted order, so canonical sequences already come out lexicographically
    // sorted; the sort below is a cheap invariant guard.
    for_each_k_cycle(graph, k, [&cycles](const std::vector<int>& path) {
        cycles.push_back(Cycle{path});
    });
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

Coloring flipped(const Coloring& coloring) {
    Coloring out = coloring;
    for (Color& c : out.colors) {
        c = c == Color::Red ? Color::Blue : Color::Red;
    }
    return out;
}

bool is_valid_coloring(const Graph& graph, int k, const Coloring& coloring) {
    if (coloring.num_vertices() != graph.num_vertices()) {
        throw std::invalid_argument("coloring covers " + std::to_string(coloring.num_vertices()) +
                                    " vertices, graph has " +
                                    std::to_string(graph.num_vertices()));
    }
    bool valid = true;
    for_each_k_cycle(graph, k, [&](const std::vector<int>& cycle) {
        if (!valid) return;
        Color first = coloring.colors[static_cast<size_t>(cycle[0])];
        for (int v : cycle) {
            if (coloring.colors[static_cast<size_t>(v)] != first) return;
        }
        valid = false;
    });
    return valid;
}

std::optional<Coloring> brute_force_coloring(const Graph& graph, int k, int max_vertices) {
    const int n = graph.num_vertices();
    if (n > max_vertices) {
        throw std::invalid_argument("brute_force_coloring: " + std::to_string(n) +
                                    " vertices exceeds cap of " + std::to_string(max_vertices));
    }
    if (max_vertices > 30) {
        throw std::invalid_argument("brute_force_coloring: cap above 30 is not supported");
    }
    if (n == 0) return Coloring{};

    // Cycle vertex-set masks; monochromaticity only depends on the set.
    std::vector<uint32_t> cycle_masks;
    for (const Cycle& cycle : enumerate_k_cycles(graph, k)) {
        uint32_t mask = 0;
        for (int v : cycle.vertices) mask |= uint32_t{1} << v;
        cycle_masks.push_back(mask);
    }

    // Bit v set means vertex v is blue. Vertex 0 stays red; bit patterns are
    // ordered so that increasing `bits` is lexicographic order on the color
    // vector with vertex 1 most significant.
    const uint64_t limit = uint64_t{1} << (n - 1);
    for (uint64_t counter = 0; counter < limit; ++counter) {
        uint32_t blue = 0;
        for (int v = 1; v < n; ++v) {
            if ((counter >> (n - 1 - v)) & 1) blue |= uint32_t{1} << v;
        }
        bool valid = true;
        for (uint32_t mask : cycle_masks) {
            uint32_t overlap = blue & mask;
            if (overlap == 0 || overlap == mask) {
                valid = false;
                break;
            }
        }
        if (valid) {
            Coloring coloring;
            coloring.colors.assign(static_cast<size_t>(n), Color::Red);
            for (int v = 1; v < n; ++v) {
                if ((blue >> v) & 1) coloring.colors[static_cast<size_t>(v)] = Color::Blue;
            }
            return coloring;
        }
    }
    return std::nullopt;
}

bool is_connected(const Graph& graph) {
    const int n = graph.num_vertices();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int visited = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : graph.neighbors(u)) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++visited;
                queue.push(v);
            }
        }
    }
    return visited == n;
}

Graph complete_graph(int n) {
    Graph graph(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) graph.add_edge(u, v);
    }
    return graph;
}

}  // namespace naecol
