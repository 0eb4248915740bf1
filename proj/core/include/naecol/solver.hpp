#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "naecol/graph.hpp"

namespace naecol {

/// CNF over one boolean variable per vertex (true = red), in DIMACS literal
/// convention: +(v+1) for "vertex v is red", -(v+1) for "vertex v is blue".
/// Clauses are stored flat; clause c spans literals
/// [clause_offsets[c], clause_offsets[c+1]).
struct CnfEncoding {
    int num_variables = 0;
    std::vector<int32_t> literals;
    std::vector<uint32_t> clause_offsets = {0};

    int num_clauses() const { return static_cast<int>(clause_offsets.size()) - 1; }
    void add_clause(std::span<const int32_t> clause);
};

/// "No monochromatic k-cycle" as NAE constraints: for each k-cycle, one
/// all-positive clause (some vertex red) and one all-negative clause (some
/// vertex blue), in canonical cycle order.
CnfEncoding encode_nae_cycles(const Graph& graph, int k);

/// Standard DIMACS text for cross-checking with external SAT solvers.
std::string encoding_to_dimacs(const CnfEncoding& encoding);

enum class SolveStatus : uint8_t { Satisfiable, Unsatisfiable };

struct SolveStats {
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t conflicts = 0;
    uint64_t restarts = 0;
    uint64_t learned_clauses = 0;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unsatisfiable;
    /// Present iff satisfiable: variable v true maps to vertex v Red.
    std::optional<Coloring> model;
    SolveStats stats;
};

/// A solver assumption pinning one vertex to one color.
struct Assumption {
    int vertex = 0;
    Color color = Color::Red;
};

/// Complete CDCL solver (two-watched-literal propagation, first-UIP clause
/// learning, activity-driven branching with phase saving, Luby restarts,
/// learned-clause garbage collection). Deterministic: identical inputs give
/// identical results and statistics. Ties in branching go to the
/// lowest-index variable and fresh variables start red. Throws
/// std::invalid_argument on out-of-range or contradictory assumptions.
SolveResult sat_solve(const CnfEncoding& encoding, std::span<const Assumption> assumptions = {});

/// Decides whether the graph has a coloring with no monochromatic k-cycle,
/// fixing vertex 0 red (sound by color-flip symmetry). Returns a witness
/// coloring or nullopt.
std::optional<Coloring> decide_col(const Graph& graph, int k);

/// True iff the graph is colorable at all and no valid coloring gives x and
/// y the same color (checked by assuming both red; the both-blue case is the
/// color flip).
bool check_forcing(const Graph& graph, int k, int x, int y);

}  // namespace naecol
