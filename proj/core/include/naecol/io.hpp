#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "naecol/gadgets.hpp"
#include "naecol/graph.hpp"
#include "naecol/reduction.hpp"
#include "naecol/search.hpp"

namespace naecol {

/// Raised when a JSON artifact is missing fields, mistyped, or violates the
/// represented object's invariants.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Graph JSON: {"num_vertices": N, "edges": [[a, b], ...]} with each pair
/// ascending and the list sorted lexicographically. Readers check structure
/// and graph invariants but ignore unknown keys, so any superset artifact
/// (e.g. a gadget file) also reads as a plain graph.
nlohmann::json graph_to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& value);

/// Coloring JSON: {"colors": ["red" | "blue", ...]} indexed by vertex.
nlohmann::json coloring_to_json(const Coloring& coloring);
Coloring coloring_from_json(const nlohmann::json& value);

/// Gadget JSON: graph JSON plus {"designated_edge": [x, y], "k": k}.
nlohmann::json gadget_to_json(const Gadget& gadget);
Gadget gadget_from_json(const nlohmann::json& value);

/// Reduction JSON: {"k", "variant", "graph", "labels": {"literal_vertices",
/// "slot_vertices"}, "stats"}.
nlohmann::json reduction_to_json(const ReductionOutput& reduction);
ReductionOutput reduction_from_json(const nlohmann::json& value);

nlohmann::json size_prediction_to_json(const SizePrediction& prediction);

/// Search report JSON; the winner, when present, is embedded as gadget JSON.
nlohmann::json search_report_to_json(const SearchReport& report,
                                     const std::optional<Gadget>& winner);

/// GraphViz export. A coloring fills vertices red/blue; a highlighted pair
/// (a gadget's designated edge) is drawn bold.
std::string to_dot(const Graph& graph, const Coloring* coloring = nullptr,
                   std::optional<std::pair<int, int>> highlight = std::nullopt);

/// Whole-file helpers used by the CLI and tests; throw IoError on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& value);

}  // namespace naecol
