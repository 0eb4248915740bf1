#include "naecol/gadgets.hpp"

#include <stdexcept>
#include <string>

#include "naecol/solver.hpp"

namespace naecol {
namespace {

void add_clique_on(Graph& graph, const std::vector<int>& vertices) {
    for (size_t i = 0; i < vertices.size(); ++i) {
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            graph.ensure_edge(vertices[i], vertices[j]);
        }
    }
}

int nodes_of_height(int height) { return (1 << (height + 1)) - 1; }

int leftmost_descendant(int position, int relative_depth) {
    return ((position + 1) << relative_depth) - 1;
}

// All tree positions at absolute depth d: [2^d - 1, 2^(d+1) - 2].
std::pair<int, int> depth_range(int depth) {
    return {(1 << depth) - 1, (1 << (depth + 1)) - 2};
}

TreeGadget build_tree(int k, int height, std::vector<int> ci_depths, bool leaf_bite) {
    TreeGadgetLayout layout;
    layout.k = k;
    layout.height = height;
    layout.ci_depths = std::move(ci_depths);
    layout.leaf_bite = leaf_bite;
    layout.num_nodes = nodes_of_height(height);

    Graph graph(2 * layout.num_nodes);

    // Node pairs first, then a K6 on every internal node: its own pair plus
    // both children's pairs. Sharing a node pair between adjacent K6s is what
    // chains the pigeonhole argument down the tree.
    for (int p = 0; p < layout.num_nodes; ++p) {
        auto [a, b] = layout.node_pair(p);
        graph.add_edge(a, b);
    }
    const int first_leaf = (1 << height) - 1;
    for (int p = 0; p < first_leaf; ++p) {
        auto [s0, s1] = layout.node_pair(p);
        auto [l0, l1] = layout.node_pair(2 * p + 1);
        auto [r0, r1] = layout.node_pair(2 * p + 2);
        add_clique_on(graph, {s0, s1, l0, l1, r0, r1});
    }

    // Bands between consecutive cycle-inducing levels. The square pattern
    // never crosses the pair sides; the bite band (odd k, deepest band only)
    // instead fans each leaf's first vertex into both ancestor vertices,
    // which shortens the forced cycle by one. Anchoring at the leaf keeps the
    // band side-locked at the wide end: anchoring at the ancestor leaves the
    // graph uncolorable, and giving the root a fan over the leaves breaks
    // forcing, both via monochromatic cycles that dodge every pair.
    for (size_t band = 0; band + 1 < layout.ci_depths.size(); ++band) {
        const int top_depth = layout.ci_depths[band];
        const int bottom_depth = layout.ci_depths[band + 1];
        const int rel = bottom_depth - top_depth;
        const bool bite = leaf_bite && band + 2 == layout.ci_depths.size();
        auto [top_begin, top_end] = depth_range(top_depth);
        for (int p = top_begin; p <= top_end; ++p) {
            auto [p0, p1] = layout.node_pair(p);
            const int child_begin = leftmost_descendant(p, rel);
            for (int c = child_begin; c < child_begin + (1 << rel); ++c) {
                auto [c0, c1] = layout.node_pair(c);
                if (bite) {
                    graph.ensure_edge(c0, p0);
                    graph.ensure_edge(c0, p1);
                } else {
                    graph.ensure_edge(p0, c0);
                    graph.ensure_edge(p1, c1);
                }
            }
        }
    }

    TreeGadget result;
    result.gadget = Gadget{std::move(graph), 0, 1, k};
    result.layout = std::move(layout);
    return result;
}

}  // namespace

StringGraph k4_string(int length) {
    if (length < 1) {
        throw std::invalid_argument("k4_string: length must be at least 1");
    }
    Graph graph(2 * length + 2);
    for (int block = 1; block <= length; ++block) {
        add_clique_on(graph, {2 * block - 2, 2 * block - 1, 2 * block, 2 * block + 1});
    }
    return StringGraph{std::move(graph), {0, 1}, {2 * length, 2 * length + 1}};
}

Gadget k4_loop(int length) {
    if (length < 3) {
        throw std::invalid_argument("k4_loop: length must be at least 3");
    }
    Graph graph(2 * length);
    for (int block = 1; block < length; ++block) {
        add_clique_on(graph, {2 * block - 2, 2 * block - 1, 2 * block, 2 * block + 1});
    }
    add_clique_on(graph, {2 * length - 2, 2 * length - 1, 0, 1});
    return Gadget{std::move(graph), 0, 1, 3};
}

TreeGadget build_tree_gadget(int k) {
    if (k < 4) {
        throw std::invalid_argument("tree gadget requires k >= 4; use k4_loop for k = 3");
    }
    const int q = (k - 1) / 2;
    const int height = 4 * q;
    std::vector<int> ci_depths;
    for (int d = 0; d <= height; d += 4) ci_depths.push_back(d);
    return build_tree(k, height, std::move(ci_depths), k % 2 == 1);
}

Gadget tree_gadget(int k) { return build_tree_gadget(k).gadget; }

Gadget tree_gadget_at_height(int k, int height) {
    if (k != 4) {
        throw std::invalid_argument("height ablation is defined for k = 4");
    }
    if (height < 1) {
        throw std::invalid_argument("height must be at least 1");
    }
    return build_tree(k, height, {0, height}, false).gadget;
}

std::vector<int> donut_cycle(const TreeGadgetLayout& layout) {
    std::vector<int> chain = {0};
    for (size_t i = 0; i + 1 < layout.ci_depths.size(); ++i) {
        const int rel = layout.ci_depths[i + 1] - layout.ci_depths[i];
        chain.push_back(leftmost_descendant(chain.back(), rel));
    }
    std::vector<int> cycle;
    // Down the first-vertex side, across the deepest pair, back up the
    // second-vertex side. With a leaf bite the leaf contributes only its
    // first vertex, which closes into the ancestor's second vertex directly.
    for (int p : chain) cycle.push_back(layout.node_pair(p).first);
    const size_t begin = layout.leaf_bite ? chain.size() - 1 : chain.size();
    for (size_t i = begin; i > 0;) {
        --i;
        cycle.push_back(layout.node_pair(chain[i]).second);
    }
    return cycle;
}

VerificationReport verify_super_edge(const Gadget& gadget, VerifyMethod method,
                                     int exhaustive_cap) {
    VerificationReport report;
    report.method = method;
    const Graph& graph = gadget.graph;
    const int n = graph.num_vertices();

    if (method == VerifyMethod::Sat) {
        report.existence = decide_col(graph, gadget.k).has_value();
        if (report.existence) {
            report.forcing = check_forcing(graph, gadget.k, gadget.x, gadget.y);
        }
        return report;
    }

    if (n > exhaustive_cap) {
        throw std::invalid_argument("verify_super_edge: " + std::to_string(n) +
                                    " vertices exceeds exhaustive cap of " +
                                    std::to_string(exhaustive_cap));
    }
    if (exhaustive_cap > 30) {
        throw std::invalid_argument("verify_super_edge: cap above 30 is not supported");
    }

    std::vector<uint32_t> cycle_masks;
    for (const Cycle& cycle : enumerate_k_cycles(graph, gadget.k)) {
        uint32_t mask = 0;
        for (int v : cycle.vertices) mask |= uint32_t{1} << v;
        cycle_masks.push_back(mask);
    }

    uint64_t valid = 0;
    bool monochromatic_pair_seen = false;
    const uint64_t limit = uint64_t{1} << n;
    for (uint64_t blue = 0; blue < limit; ++blue) {
        bool ok = true;
        for (uint32_t mask : cycle_masks) {
            uint32_t overlap = static_cast<uint32_t>(blue) & mask;
            if (overlap == 0 || overlap == mask) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        ++valid;
        if (((blue >> gadget.x) & 1) == ((blue >> gadget.y) & 1)) {
            monochromatic_pair_seen = true;
        }
    }
    report.valid_colorings = valid;
    report.existence = valid > 0;
    report.forcing = valid > 0 && !monochromatic_pair_seen;
    return report;
}

}  // namespace naecol
