#include "naecol/canon.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace naecol {
namespace {

constexpr int kMaxCanonVertices = 11;

int pair_index(int i, int j) {  // requires i < j
    return j * (j - 1) / 2 + i;
}

uint64_t pair_bit(int i, int j) { return uint64_t{1} << (63 - pair_index(i, j)); }

// Adjacency rows as vertex bitmasks.
using Rows = std::array<uint16_t, kMaxCanonVertices>;

Rows rows_from_bits(uint64_t bits, int n) {
    Rows rows{};
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits & pair_bit(i, j)) {
                rows[static_cast<size_t>(i)] |= uint16_t(1u << j);
                rows[static_cast<size_t>(j)] |= uint16_t(1u << i);
            }
        }
    }
    return rows;
}

// Branch-and-bound search for the permutation minimizing the adjacency
// string. Positions are filled left to right; fixing position j decides the
// bits of column j (adjacency to the already-placed vertices), so a partial
// assignment pins a prefix of the string and any branch whose prefix exceeds
// the best known full string can be cut. Candidates at each position are
// tried in ascending column order so the minimum is found early.
struct CanonSearch {
    int n;
    const Rows& rows;
    uint64_t best = ~uint64_t{0};
    std::array<int, kMaxCanonVertices> perm{};   // perm[pos] = original vertex
    std::array<char, kMaxCanonVertices> used{};

    void run(int pos, uint64_t prefix) {
        if (pos == n) {
            best = std::min(best, prefix);
            return;
        }
        const int first_bit = pos * (pos - 1) / 2;
        struct Candidate {
            uint64_t column;
            int vertex;
        };
        std::array<Candidate, kMaxCanonVertices> cands;
        int num_cands = 0;
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            uint64_t column = 0;
            for (int i = 0; i < pos; ++i) {
                if (rows[static_cast<size_t>(v)] & (1u << perm[static_cast<size_t>(i)])) {
                    column |= uint64_t{1} << (63 - (first_bit + i));
                }
            }
            cands[static_cast<size_t>(num_cands++)] = Candidate{column, v};
        }
        std::sort(cands.begin(), cands.begin() + num_cands,
                  [](const Candidate& a, const Candidate& b) {
                      return a.column != b.column ? a.column < b.column : a.vertex < b.vertex;
                  });
        const int bits_filled = first_bit + pos;
        const uint64_t prefix_mask =
            bits_filled == 0 ? 0 : ~uint64_t{0} << (64 - bits_filled);
        for (int c = 0; c < num_cands; ++c) {
            uint64_t next = prefix | cands[static_cast<size_t>(c)].column;
            if ((next & prefix_mask) > (best & prefix_mask)) {
                break;  // candidates are sorted, the rest are no better
            }
            int v = cands[static_cast<size_t>(c)].vertex;
            perm[static_cast<size_t>(pos)] = v;
            used[static_cast<size_t>(v)] = 1;
            run(pos + 1, next);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

void check_size(int n) {
    if (n < 0 || n > kMaxCanonVertices) {
        throw std::invalid_argument("canonical form supports at most " +
                                    std::to_string(kMaxCanonVertices) + " vertices");
    }
}

}  // namespace

uint64_t adjacency_bits(const Graph& graph) {
    check_size(graph.num_vertices());
    uint64_t bits = 0;
    for (auto [u, v] : graph.edges()) bits |= pair_bit(u, v);
    return bits;
}

Graph graph_from_bits(uint64_t bits, int num_vertices) {
    check_size(num_vertices);
    Graph graph(num_vertices);
    for (int j = 1; j < num_vertices; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits & pair_bit(i, j)) graph.add_edge(i, j);
        }
    }
    return graph;
}

uint64_t canonical_form_bits(uint64_t bits, int num_vertices) {
    check_size(num_vertices);
    if (num_vertices <= 1) return 0;
    Rows rows = rows_from_bits(bits, num_vertices);
    CanonSearch search{num_vertices, rows};
    search.run(0, 0);
    return search.best;
}

uint64_t canonical_form(const Graph& graph) {
    return canonical_form_bits(adjacency_bits(graph), graph.num_vertices());
}

Graph canonicalized(const Graph& graph) {
    return graph_from_bits(canonical_form(graph), graph.num_vertices());
}

}  // namespace naecol
