#include "naecol/io.hpp"

#include <fstream>
#include <sstream>

namespace naecol {
namespace {

using nlohmann::json;

const json& require(const json& value, const char* key, const char* what) {
    if (!value.is_object()) {
        throw IoError(std::string(what) + ": expected a JSON object");
    }
    auto it = value.find(key);
    if (it == value.end()) {
        throw IoError(std::string(what) + ": missing key '" + key + "'");
    }
    return *it;
}

int require_int(const json& value, const char* key, const char* what) {
    const json& field = require(value, key, what);
    if (!field.is_number_integer()) {
        throw IoError(std::string(what) + ": key '" + key + "' must be an integer");
    }
    return field.get<int>();
}

std::pair<int, int> read_pair(const json& value, const char* what) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number_integer() ||
        !value[1].is_number_integer()) {
        throw IoError(std::string(what) + ": expected a two-integer array");
    }
    return {value[0].get<int>(), value[1].get<int>()};
}

std::string variant_name(ReductionVariant variant) {
    return variant == ReductionVariant::Basic ? "basic" : "necklace";
}

ReductionVariant variant_from_name(const std::string& name) {
    if (name == "basic") return ReductionVariant::Basic;
    if (name == "necklace") return ReductionVariant::Necklace;
    throw IoError("reduction: unknown variant '" + name + "'");
}

}  // namespace

json graph_to_json(const Graph& graph) {
    json edges = json::array();
    for (const auto& [a, b] : graph.edges()) edges.push_back(json::array({a, b}));
    return json{{"num_vertices", graph.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& value) {
    const int num_vertices = require_int(value, "num_vertices", "graph");
    if (num_vertices < 0) throw IoError("graph: num_vertices must be non-negative");
    const json& edges = require(value, "edges", "graph");
    if (!edges.is_array()) throw IoError("graph: key 'edges' must be an array");
    Graph graph(num_vertices);
    for (const json& entry : edges) {
        const auto [a, b] = read_pair(entry, "graph edge");
        try {
            graph.add_edge(a, b);
        } catch (const std::invalid_argument& error) {
            throw IoError(std::string("graph: ") + error.what());
        }
    }
    return graph;
}

json coloring_to_json(const Coloring& coloring) {
    json colors = json::array();
    for (Color color : coloring.colors) colors.push_back(color == Color::Red ? "red" : "blue");
    return json{{"colors", std::move(colors)}};
}

Coloring coloring_from_json(const json& value) {
    const json& colors = require(value, "colors", "coloring");
    if (!colors.is_array()) throw IoError("coloring: key 'colors' must be an array");
    Coloring coloring;
    coloring.colors.reserve(colors.size());
    for (const json& entry : colors) {
        if (!entry.is_string()) throw IoError("coloring: colors must be strings");
        const std::string name = entry.get<std::string>();
        if (name == "red") {
            coloring.colors.push_back(Color::Red);
        } else if (name == "blue") {
            coloring.colors.push_back(Color::Blue);
        } else {
            throw IoError("coloring: unknown color '" + name + "'");
        }
    }
    return coloring;
}

json gadget_to_json(const Gadget& gadget) {
    json value = graph_to_json(gadget.graph);
    value["designated_edge"] = json::array({gadget.x, gadget.y});
    value["k"] = gadget.k;
    return value;
}

Gadget gadget_from_json(const json& value) {
    Gadget gadget;
    gadget.graph = graph_from_json(value);
    const auto [x, y] = read_pair(require(value, "designated_edge", "gadget"), "gadget");
    gadget.x = x;
    gadget.y = y;
    gadget.k = require_int(value, "k", "gadget");
    if (x < 0 || y < 0 || x >= gadget.graph.num_vertices() || y >= gadget.graph.num_vertices()) {
        throw IoError("gadget: designated edge endpoint out of range");
    }
    if (x == y) throw IoError("gadget: designated edge endpoints must differ");
    if (gadget.k < 3) throw IoError("gadget: k must be at least 3");
    return gadget;
}

json reduction_to_json(const ReductionOutput& reduction) {
    json literal_vertices = json::array();
    for (const auto& pair : reduction.literal_vertices) {
        literal_vertices.push_back(json::array({pair[0], pair[1]}));
    }
    json slot_vertices = json::array();
    for (const auto& slots : reduction.slot_vertices) slot_vertices.push_back(slots);
    return json{
        {"k", reduction.k},
        {"variant", variant_name(reduction.variant)},
        {"graph", graph_to_json(reduction.graph)},
        {"labels",
         {{"literal_vertices", std::move(literal_vertices)},
          {"slot_vertices", std::move(slot_vertices)}}},
        {"stats",
         {{"variable_gadgets", reduction.stats.variable_gadgets},
          {"clause_gadgets", reduction.stats.clause_gadgets},
          {"occurrence_gadgets", reduction.stats.occurrence_gadgets},
          {"num_vertices", reduction.stats.num_vertices},
          {"num_edges", reduction.stats.num_edges}}},
    };
}

ReductionOutput reduction_from_json(const json& value) {
    ReductionOutput reduction;
    reduction.k = require_int(value, "k", "reduction");
    const json& variant = require(value, "variant", "reduction");
    if (!variant.is_string()) throw IoError("reduction: variant must be a string");
    reduction.variant = variant_from_name(variant.get<std::string>());
    reduction.graph = graph_from_json(require(value, "graph", "reduction"));

    const json& labels = require(value, "labels", "reduction");
    const json& literal_vertices = require(labels, "literal_vertices", "reduction labels");
    if (!literal_vertices.is_array()) {
        throw IoError("reduction: literal_vertices must be an array");
    }
    for (const json& entry : literal_vertices) {
        const auto [pos, neg] = read_pair(entry, "reduction literal pair");
        reduction.literal_vertices.push_back({pos, neg});
    }
    const json& slot_vertices = require(labels, "slot_vertices", "reduction labels");
    if (!slot_vertices.is_array()) throw IoError("reduction: slot_vertices must be an array");
    for (const json& entry : slot_vertices) {
        if (!entry.is_array()) throw IoError("reduction: slot lists must be arrays");
        std::vector<int> slots;
        for (const json& slot : entry) {
            if (!slot.is_number_integer()) throw IoError("reduction: slots must be integers");
            slots.push_back(slot.get<int>());
        }
        reduction.slot_vertices.push_back(std::move(slots));
    }

    const json& stats = require(value, "stats", "reduction");
    reduction.stats.variable_gadgets = require_int(stats, "variable_gadgets", "reduction stats");
    reduction.stats.clause_gadgets = require_int(stats, "clause_gadgets", "reduction stats");
    reduction.stats.occurrence_gadgets =
        require_int(stats, "occurrence_gadgets", "reduction stats");
    reduction.stats.num_vertices = require_int(stats, "num_vertices", "reduction stats");
    reduction.stats.num_edges = require_int(stats, "num_edges", "reduction stats");
    if (reduction.stats.num_vertices != reduction.graph.num_vertices() ||
        reduction.stats.num_edges != reduction.graph.num_edges()) {
        throw IoError("reduction: stats disagree with the embedded graph");
    }
    return reduction;
}

json size_prediction_to_json(const SizePrediction& prediction) {
    return json{
        {"edges_published", prediction.edges_published},
        {"vertices_published", prediction.vertices_published},
        {"edges_derived", prediction.edges_derived},
        {"vertices_derived", prediction.vertices_derived},
        {"edges_match", prediction.edges_match()},
        {"vertices_match", prediction.vertices_match()},
    };
}

json search_report_to_json(const SearchReport& report, const std::optional<Gadget>& winner) {
    json value{
        {"k", report.k},
        {"objective", report.objective == SearchObjective::Vertices ? "vertices" : "edges"},
        {"max_vertices", report.max_vertices},
        {"completed", report.completed},
        {"graphs_examined", report.graphs_examined},
        {"canonical_counts", report.canonical_counts},
        {"elapsed_seconds", report.elapsed_seconds},
        {"notes", report.notes},
    };
    value["winner"] = winner ? gadget_to_json(*winner) : json(nullptr);
    value["resume_token"] = report.resume_token.empty() ? json(nullptr) : json(report.resume_token);
    return value;
}

std::string to_dot(const Graph& graph, const Coloring* coloring,
                   std::optional<std::pair<int, int>> highlight) {
    if (coloring && coloring->num_vertices() != graph.num_vertices()) {
        throw IoError("dot export: coloring does not cover the graph");
    }
    std::ostringstream out;
    out << "graph G {\n  node [style=filled, fillcolor=white];\n";
    for (int v = 0; v < graph.num_vertices(); ++v) {
        out << "  " << v;
        if (coloring) {
            out << " [fillcolor="
                << (coloring->colors[static_cast<size_t>(v)] == Color::Red ? "indianred1"
                                                                           : "lightskyblue")
                << "]";
        }
        out << ";\n";
    }
    for (const auto& [a, b] : graph.edges()) {
        out << "  " << a << " -- " << b;
        if (highlight && ((highlight->first == a && highlight->second == b) ||
                          (highlight->first == b && highlight->second == a))) {
            out << " [penwidth=3, color=black]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed while reading '" + path + "'");
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out.flush()) throw IoError("failed while writing '" + path + "'");
}

json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) throw IoError("'" + path + "' is not valid JSON");
    return value;
}

void write_json_file(const std::string& path, const json& value) {
    write_text_file(path, value.dump(2) + "\n");
}

}  // namespace naecol
