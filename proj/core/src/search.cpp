#include "naecol/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "naecol/canon.hpp"
#include "naecol/graph.hpp"

namespace naecol {
namespace {

constexpr int kMaxSearchVertices = 11;

uint64_t pair_bit(int i, int j) {  // requires i < j
    return uint64_t{1} << (63 - (j * (j - 1) / 2 + i));
}

/// Extends every canonical graph on n-1 vertices by a fresh vertex n-1
/// joined to each subset of the old vertices, canonicalizes, and dedupes.
/// Every n-vertex graph arises this way (delete its last vertex), so the
/// output is the complete canonical census at n.
std::vector<uint64_t> extend_level(const std::vector<uint64_t>& parents, int n, int workers) {
    const uint32_t subset_count = uint32_t{1} << (n - 1);

    auto extend_range = [&](size_t begin, size_t end, std::unordered_set<uint64_t>& out) {
        for (size_t p = begin; p < end; ++p) {
            const uint64_t base = parents[p];
            for (uint32_t subset = 0; subset < subset_count; ++subset) {
                uint64_t bits = base;
                for (int i = 0; i < n - 1; ++i) {
                    if ((subset >> i) & 1) bits |= pair_bit(i, n - 1);
                }
                out.insert(canonical_form_bits(bits, n));
            }
        }
    };

    std::unordered_set<uint64_t> seen;
    if (workers <= 1 || parents.size() < 2) {
        extend_range(0, parents.size(), seen);
    } else {
        const size_t used = std::min<size_t>(static_cast<size_t>(workers), parents.size());
        std::vector<std::unordered_set<uint64_t>> partial(used);
        std::vector<std::thread> threads;
        const size_t chunk = (parents.size() + used - 1) / used;
        for (size_t w = 0; w < used; ++w) {
            const size_t begin = w * chunk;
            const size_t end = std::min(parents.size(), begin + chunk);
            threads.emplace_back(extend_range, begin, end, std::ref(partial[w]));
        }
        for (auto& t : threads) t.join();
        for (auto& part : partial) seen.merge(part);
    }

    std::vector<uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Exhaustive certification of one canonical graph: returns the first
/// certified designated edge in lexicographic edge order, if any. One pass
/// over the coloring space (vertex 0 fixed red; every property here is
/// color-flip invariant) covers existence and per-edge forcing together.
std::optional<Gadget> check_graph(const Graph& graph, int k, bool prune) {
    const int n = graph.num_vertices();
    const auto cycles = enumerate_k_cycles(graph, k);
    std::vector<uint32_t> cycle_masks;
    cycle_masks.reserve(cycles.size());
    for (const Cycle& cycle : cycles) {
        uint32_t mask = 0;
        for (int v : cycle.vertices) mask |= uint32_t{1} << v;
        cycle_masks.push_back(mask);
    }

    std::vector<std::pair<int, int>> candidates;
    if (prune) {
        // A pair off every k-cycle can never force: flipping such a vertex
        // in a valid coloring only touches cycles through it, so both pair
        // orientations stay reachable. No cycles at all means every coloring
        // is valid, including monochromatic ones.
        if (!is_connected(graph) || cycle_masks.empty()) return std::nullopt;
        uint32_t on_cycle = 0;
        for (uint32_t mask : cycle_masks) on_cycle |= mask;
        for (const auto& [a, b] : graph.edges()) {
            if (((on_cycle >> a) & 1) && ((on_cycle >> b) & 1)) candidates.push_back({a, b});
        }
    } else {
        candidates = graph.edges();
    }
    if (candidates.empty()) return std::nullopt;

    bool any_valid = false;
    std::vector<char> pair_monochromatic(candidates.size(), 0);
    const uint32_t half = n > 1 ? uint32_t{1} << (n - 1) : 1;
    for (uint32_t rest = 0; rest < half; ++rest) {
        const uint32_t blue = rest << 1;
        bool valid = true;
        for (uint32_t mask : cycle_masks) {
            const uint32_t overlap = blue & mask;
            if (overlap == 0 || overlap == mask) {
                valid = false;
                break;
            }
        }
        if (!valid) continue;
        any_valid = true;
        for (size_t e = 0; e < candidates.size(); ++e) {
            if (((blue >> candidates[e].first) & 1) == ((blue >> candidates[e].second) & 1)) {
                pair_monochromatic[e] = 1;
            }
        }
    }
    if (!any_valid) return std::nullopt;
    for (size_t e = 0; e < candidates.size(); ++e) {
        if (!pair_monochromatic[e]) {
            return Gadget{graph, candidates[e].first, candidates[e].second, k};
        }
    }
    return std::nullopt;
}

struct ResumePoint {
    int level = 0;
    uint64_t index = 0;
    uint64_t examined = 0;
};

ResumePoint parse_resume(const std::string& token) {
    ResumePoint point;
    if (token.empty()) return point;
    unsigned long long index = 0;
    unsigned long long examined = 0;
    if (std::sscanf(token.c_str(), "level=%d;index=%llu;examined=%llu", &point.level, &index,
                    &examined) != 3 ||
        point.level < 1) {
        throw std::invalid_argument("search: malformed resume token '" + token + "'");
    }
    point.index = index;
    point.examined = examined;
    return point;
}

std::string format_resume(int level, uint64_t index, uint64_t examined) {
    return "level=" + std::to_string(level) + ";index=" + std::to_string(index) +
           ";examined=" + std::to_string(examined);
}

struct Candidate {
    Gadget gadget;
    int vertices = 0;
    int edges = 0;
    uint64_t index = 0;  // position in the level's sorted canonical list

    bool better_than(const Candidate& other, SearchObjective objective) const {
        const auto key = [objective](const Candidate& c) {
            return objective == SearchObjective::Vertices
                       ? std::tuple(c.vertices, c.edges, c.index)
                       : std::tuple(c.edges, c.vertices, c.index);
        };
        return key(*this) < key(other);
    }
};

}  // namespace

std::vector<uint64_t> enumerate_canonical_graphs(int n, int workers) {
    if (n < 1 || n > kMaxSearchVertices) {
        throw std::invalid_argument("enumerate_canonical_graphs: n must be in 1.." +
                                    std::to_string(kMaxSearchVertices));
    }
    std::vector<uint64_t> level = {0};
    for (int size = 2; size <= n; ++size) level = extend_level(level, size, workers);
    return level;
}

SearchResult search_min_gadget(const SearchOptions& options) {
    if (options.k < 3) throw std::invalid_argument("search: k must be at least 3");
    if (options.max_vertices < 1 || options.max_vertices > kMaxSearchVertices) {
        throw std::invalid_argument("search: max_vertices must be in 1.." +
                                    std::to_string(kMaxSearchVertices));
    }
    if (options.workers < 1) throw std::invalid_argument("search: workers must be at least 1");
    const ResumePoint resume = parse_resume(options.resume);

    const auto start_time = std::chrono::steady_clock::now();
    SearchResult result;
    SearchReport& report = result.report;
    report.k = options.k;
    report.objective = options.objective;
    report.max_vertices = options.max_vertices;
    report.graphs_examined = resume.examined;
    report.notes.push_back("designated pairs are restricted to edges of the graph");
    report.notes.push_back(
        options.prune
            ? "skipping graphs that are disconnected, k-cycle-free, or whose pairs miss "
              "every k-cycle (each rule is certification-preserving)"
            : "no pruning: every edge of every canonical graph is tested");

    std::optional<Candidate> best;
    std::vector<uint64_t> level = {0};
    for (int n = 1; n <= options.max_vertices; ++n) {
        if (best && options.objective == SearchObjective::Vertices) break;
        if (n > 1) level = extend_level(level, n, options.workers);
        report.canonical_counts.push_back(level.size());
        if (n < resume.level) continue;  // covered by the interrupted run

        const uint64_t first = n == resume.level ? resume.index : 0;
        std::optional<Candidate> level_best;

        auto verdict_for = [&](uint64_t idx) -> std::optional<Candidate> {
            const Graph graph = graph_from_bits(level[idx], n);
            auto gadget = check_graph(graph, options.k, options.prune);
            if (!gadget) return std::nullopt;
            return Candidate{*std::move(gadget), n, graph.num_edges(), idx};
        };
        auto offer = [](std::optional<Candidate>& slot, std::optional<Candidate> candidate,
                        SearchObjective objective) {
            if (candidate && (!slot || candidate->better_than(*slot, objective))) {
                slot = std::move(candidate);
            }
        };

        if (options.max_graphs > 0 || options.workers <= 1) {
            for (uint64_t idx = first; idx < level.size(); ++idx) {
                if (options.max_graphs > 0 && report.graphs_examined >= options.max_graphs) {
                    report.resume_token = format_resume(n, idx, report.graphs_examined);
                    report.elapsed_seconds =
                        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                      start_time)
                            .count();
                    result.gadget = best ? std::optional(best->gadget) : std::nullopt;
                    return result;
                }
                ++report.graphs_examined;
                offer(level_best, verdict_for(idx), options.objective);
            }
        } else {
            const size_t used =
                std::min<size_t>(static_cast<size_t>(options.workers), level.size() - first);
            std::vector<std::optional<Candidate>> partial(used);
            std::vector<std::thread> threads;
            const uint64_t span = level.size() - first;
            const uint64_t chunk = (span + used - 1) / used;
            for (size_t w = 0; w < used; ++w) {
                const uint64_t begin = first + w * chunk;
                const uint64_t end = std::min<uint64_t>(level.size(), begin + chunk);
                threads.emplace_back([&, begin, end, w] {
                    for (uint64_t idx = begin; idx < end; ++idx) {
                        offer(partial[w], verdict_for(idx), options.objective);
                    }
                });
            }
            for (auto& t : threads) t.join();
            report.graphs_examined += span;
            for (auto& candidate : partial) {
                offer(level_best, std::move(candidate), options.objective);
            }
        }
        offer(best, std::move(level_best), options.objective);
    }

    if (best) {
        // Never trust the search path: the winner must pass the standalone
        // exhaustive verifier before being returned.
        const VerificationReport check = verify_super_edge(best->gadget, VerifyMethod::Exhaustive);
        if (!check.certified()) {
            throw std::logic_error("search: winner failed independent re-verification");
        }
        result.gadget = best->gadget;
    }
    report.completed = true;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return result;
}

SearchResult search_min_gadget(int k, int max_vertices, SearchObjective objective) {
    SearchOptions options;
    options.k = k;
    options.max_vertices = max_vertices;
    options.objective = objective;
    return search_min_gadget(options);
}

}  // namespace naecol
