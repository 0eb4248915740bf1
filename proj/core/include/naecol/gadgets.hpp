#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "naecol/graph.hpp"

namespace naecol {

/// A super-edge gadget: a graph with a designated edge {x,y} that, when the
/// gadget is certified for its k, is bichromatic in every valid coloring
/// while at least one valid coloring exists.
struct Gadget {
    Graph graph;
    int x = 0;
    int y = 0;
    int k = 3;
};

/// A chain of K4 blocks where consecutive blocks share one edge. Blocks are
/// numbered along the chain; block i (1-based) owns vertices
/// {2i-2, 2i-1, 2i, 2i+1}, so the input edge is {0,1} and the output edge is
/// {2s, 2s+1}. In any coloring with no monochromatic triangle, a
/// monochromatic input edge forces the output edge monochromatic in the
/// opposite color after each block.
struct StringGraph {
    Graph graph;
    std::pair<int, int> input_edge;
    std::pair<int, int> output_edge;
};

/// Chain of `length` >= 1 K4 blocks.
StringGraph k4_string(int length);

/// Ring of `length` >= 3 K4 blocks; block i and i+1 share an edge, and block
/// `length` shares edge {0,1} with block 1, which is the designated pair.
/// Odd lengths >= 5 are certified super-edge gadgets for k=3; length 3 is K6
/// (no valid coloring); even lengths fail forcing.
Gadget k4_loop(int length);

/// Placement of the binary-tree gadget for k >= 4: node `position` (heap
/// order, root 0) owns the vertex pair (2*position, 2*position+1). Depths in
/// `ci_depths` are the cycle-inducing levels; consecutive levels are joined
/// by vertex-pair bands in the square pattern (first vertex to first vertex,
/// second to second). When `leaf_bite` is set (odd k), the deepest band uses
/// triangles instead: the first vertex of each leaf joins both vertices of
/// its band ancestor, which shortens the forced cycle by one.
struct TreeGadgetLayout {
    int k = 4;
    int height = 4;
    std::vector<int> ci_depths;
    bool leaf_bite = false;
    int num_nodes = 0;

    std::pair<int, int> node_pair(int position) const {
        return {2 * position, 2 * position + 1};
    }
};

struct TreeGadget {
    Gadget gadget;
    TreeGadgetLayout layout;
};

/// Super-edge gadget for k >= 4: a full binary tree of vertex pairs with a
/// K6 on every internal node (its pair plus both children's pairs) and bands
/// joining consecutive cycle-inducing levels. The designated pair is the
/// root pair {0,1}.
TreeGadget build_tree_gadget(int k);
Gadget tree_gadget(int k);

/// The k=4 construction at an arbitrary tree height (the real gadget uses
/// height 4): K6s on internal nodes plus the root-to-leaf band. Used to show
/// heights below 4 fail.
Gadget tree_gadget_at_height(int k, int height);

/// The monochromatic cycle forced through the leftmost chain of
/// cycle-inducing nodes when the root pair is monochromatic; its length is
/// exactly k for a correctly built layout.
std::vector<int> donut_cycle(const TreeGadgetLayout& layout);

enum class VerifyMethod : uint8_t { Exhaustive, Sat };

struct VerificationReport {
    VerifyMethod method = VerifyMethod::Exhaustive;
    bool existence = false;
    bool forcing = false;
    std::optional<uint64_t> valid_colorings;  // exhaustive method only

    bool certified() const { return existence && forcing; }
};

/// Checks the super-edge contract. Exhaustive: scans all 2^|V| colorings
/// (throws std::invalid_argument above `exhaustive_cap` vertices) and also
/// counts the valid ones. Sat: decides existence with the cycle encoding and
/// forcing by asserting c(x)=c(y)=red and demanding unsatisfiability (the
/// all-blue case follows by flip symmetry).
VerificationReport verify_super_edge(const Gadget& gadget, VerifyMethod method,
                                     int exhaustive_cap = 22);

}  // namespace naecol
