#include "naecol/solver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace naecol {

void CnfEncoding::add_clause(std::span<const int32_t> clause) {
    if (clause.empty()) {
        throw std::invalid_argument("add_clause: empty clause");
    }
    for (int32_t lit : clause) {
        const int var = lit > 0 ? lit : -lit;
        if (lit == 0 || var > num_variables) {
            throw std::invalid_argument("add_clause: literal " + std::to_string(lit) +
                                        " out of range");
        }
    }
    literals.insert(literals.end(), clause.begin(), clause.end());
    clause_offsets.push_back(static_cast<uint32_t>(literals.size()));
}

CnfEncoding encode_nae_cycles(const Graph& graph, int k) {
    CnfEncoding encoding;
    encoding.num_variables = graph.num_vertices();
    std::vector<int32_t> scratch;
    for_each_k_cycle(graph, k, [&](const std::vector<int>& cycle) {
        scratch.clear();
        for (int v : cycle) scratch.push_back(v + 1);
        encoding.add_clause(scratch);
        for (int32_t& lit : scratch) lit = -lit;
        encoding.add_clause(scratch);
    });
    return encoding;
}

std::string encoding_to_dimacs(const CnfEncoding& encoding) {
    std::ostringstream out;
    out << "p cnf " << encoding.num_variables << ' ' << encoding.num_clauses() << '\n';
    for (int c = 0; c < encoding.num_clauses(); ++c) {
        for (uint32_t i = encoding.clause_offsets[static_cast<size_t>(c)];
             i < encoding.clause_offsets[static_cast<size_t>(c) + 1]; ++i) {
            out << encoding.literals[i] << ' ';
        }
        out << "0\n";
    }
    return out.str();
}

namespace {

// Internal literal encoding: variable v -> 2v (red / true), 2v + 1 (blue /
// false). Negation is ^1.
constexpr int negate(int lit) { return lit ^ 1; }
constexpr int var_of(int lit) { return lit >> 1; }

enum : int8_t { kFalse = -1, kUnassigned = 0, kTrue = 1 };

// Clause literals live in one shared arena so that instances with tens of
// millions of clauses avoid per-clause heap blocks. lits()[0] and lits()[1]
// are the watched pair.
struct Clause {
    uint64_t offset = 0;
    uint32_t size = 0;
    float activity = 0.0f;
    bool learned = false;
};

struct Watcher {
    int32_t clause = 0;
    int32_t blocker = 0;  // a literal of the clause; true blocker = clause satisfied
};

/// Max-heap over variables ordered by (activity, lower index first), with
/// positions for decrease/increase-key. Branching always takes the top.
class VarHeap {
  public:
    explicit VarHeap(int n) : position_(static_cast<size_t>(n), -1) {}

    bool contains(int v) const { return position_[static_cast<size_t>(v)] >= 0; }
    bool empty() const { return heap_.empty(); }

    void set_activity_source(const std::vector<double>* activity) { activity_ = activity; }

    void insert(int v) {
        if (contains(v)) return;
        position_[static_cast<size_t>(v)] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        sift_up(static_cast<int>(heap_.size()) - 1);
    }

    void increased(int v) {
        if (contains(v)) sift_up(position_[static_cast<size_t>(v)]);
    }

    int pop() {
        const int top = heap_.front();
        position_[static_cast<size_t>(top)] = -1;
        if (heap_.size() > 1) {
            heap_.front() = heap_.back();
            position_[static_cast<size_t>(heap_.front())] = 0;
            heap_.pop_back();
            sift_down(0);
        } else {
            heap_.pop_back();
        }
        return top;
    }

  private:
    bool before(int a, int b) const {
        const double x = (*activity_)[static_cast<size_t>(a)];
        const double y = (*activity_)[static_cast<size_t>(b)];
        return x > y || (x == y && a < b);
    }
    void sift_up(int i) {
        const int v = heap_[static_cast<size_t>(i)];
        while (i > 0) {
            const int parent = (i - 1) / 2;
            if (!before(v, heap_[static_cast<size_t>(parent)])) break;
            heap_[static_cast<size_t>(i)] = heap_[static_cast<size_t>(parent)];
            position_[static_cast<size_t>(heap_[static_cast<size_t>(i)])] = i;
            i = parent;
        }
        heap_[static_cast<size_t>(i)] = v;
        position_[static_cast<size_t>(v)] = i;
    }
    void sift_down(int i) {
        const int v = heap_[static_cast<size_t>(i)];
        const int n = static_cast<int>(heap_.size());
        while (true) {
            int child = 2 * i + 1;
            if (child >= n) break;
            if (child + 1 < n &&
                before(heap_[static_cast<size_t>(child + 1)], heap_[static_cast<size_t>(child)])) {
                ++child;
            }
            if (!before(heap_[static_cast<size_t>(child)], v)) break;
            heap_[static_cast<size_t>(i)] = heap_[static_cast<size_t>(child)];
            position_[static_cast<size_t>(heap_[static_cast<size_t>(i)])] = i;
            i = child;
        }
        heap_[static_cast<size_t>(i)] = v;
        position_[static_cast<size_t>(v)] = i;
    }

    const std::vector<double>* activity_ = nullptr;
    std::vector<int> heap_;
    std::vector<int> position_;
};

uint64_t luby(uint64_t x) {
    // Luby restart sequence: 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ...
    uint64_t size = 1;
    uint64_t seq = 0;
    while (size < x + 1) {
        ++seq;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        --seq;
        x %= size;
    }
    return uint64_t{1} << seq;
}

class CdclSolver {
  public:
    CdclSolver(const CnfEncoding& encoding, std::span<const Assumption> assumptions)
        : num_vars_(encoding.num_variables),
          value_(static_cast<size_t>(num_vars_), kUnassigned),
          level_(static_cast<size_t>(num_vars_), 0),
          reason_(static_cast<size_t>(num_vars_), -1),
          phase_(static_cast<size_t>(num_vars_), 0),  // branch red first
          activity_(static_cast<size_t>(num_vars_), 0.0),
          seen_(static_cast<size_t>(num_vars_), 0),
          watches_(2 * static_cast<size_t>(num_vars_)),
          heap_(num_vars_) {
        heap_.set_activity_source(&activity_);
        for (int v = 0; v < num_vars_; ++v) heap_.insert(v);
        trail_.reserve(static_cast<size_t>(num_vars_));

        for (const Assumption& a : assumptions) {
            if (a.vertex < 0 || a.vertex >= num_vars_) {
                throw std::invalid_argument("sat_solve: assumption vertex " +
                                            std::to_string(a.vertex) + " out of range");
            }
            assumptions_.push_back(2 * a.vertex + (a.color == Color::Red ? 0 : 1));
        }
        for (size_t i = 0; i < assumptions_.size(); ++i) {
            for (size_t j = i + 1; j < assumptions_.size(); ++j) {
                if (assumptions_[i] == negate(assumptions_[j])) {
                    throw std::invalid_argument(
                        "sat_solve: contradictory assumptions on vertex " +
                        std::to_string(var_of(assumptions_[i])));
                }
            }
        }

        ok_ = true;
        std::vector<int32_t> lits;
        for (int c = 0; c < encoding.num_clauses(); ++c) {
            lits.clear();
            for (uint32_t i = encoding.clause_offsets[static_cast<size_t>(c)];
                 i < encoding.clause_offsets[static_cast<size_t>(c) + 1]; ++i) {
                const int32_t dimacs = encoding.literals[i];
                const int v = (dimacs > 0 ? dimacs : -dimacs) - 1;
                lits.push_back(2 * v + (dimacs > 0 ? 0 : 1));
            }
            // Drop duplicate literals and skip tautological clauses so the
            // watch scheme never sees a clause watching one literal twice.
            std::sort(lits.begin(), lits.end());
            lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
            bool tautology = false;
            for (size_t i = 0; i + 1 < lits.size(); ++i) {
                if (lits[i + 1] == negate(lits[i])) {
                    tautology = true;
                    break;
                }
            }
            if (tautology) continue;
            if (lits.size() == 1) {
                if (!enqueue(lits[0], -1)) {
                    ok_ = false;
                    return;
                }
            } else {
                attach(lits, false);
            }
        }
    }

    SolveResult solve() {
        SolveResult result;
        if (!ok_ || !propagate_to_fixpoint()) {
            result.status = SolveStatus::Unsatisfiable;
            result.stats = stats_;
            return result;
        }

        uint64_t restart_index = 0;
        uint64_t conflict_budget = 128 * luby(restart_index);
        uint64_t conflicts_here = 0;
        size_t max_learned = std::max<size_t>(20000, clauses_.size() / 2);

        while (true) {
            const int conflict = propagate();
            if (conflict >= 0) {
                ++stats_.conflicts;
                ++conflicts_here;
                if (decision_level() == 0) {
                    result.status = SolveStatus::Unsatisfiable;
                    result.stats = stats_;
                    return result;
                }
                std::vector<int32_t> learnt;
                int backtrack_level = 0;
                analyze(conflict, learnt, backtrack_level);
                backtrack(backtrack_level);
                if (learnt.size() == 1) {
                    if (!enqueue(learnt[0], -1)) {
                        result.status = SolveStatus::Unsatisfiable;
                        result.stats = stats_;
                        return result;
                    }
                } else {
                    const int asserting = learnt[0];
                    const int id = attach(learnt, true);
                    enqueue(asserting, id);
                }
                decay_activities();
                continue;
            }

            if (conflicts_here >= conflict_budget) {
                conflicts_here = 0;
                conflict_budget = 128 * luby(++restart_index);
                ++stats_.restarts;
                backtrack(0);
                if (learned_count_ > max_learned) {
                    reduce_learned();
                    max_learned = max_learned + max_learned / 2;
                }
                continue;
            }

            // All assumptions first, then activity-ordered decisions.
            int decision = -1;
            bool assumption_pending = false;
            while (decision_level() < assumptions_.size()) {
                const int a = assumptions_[decision_level()];
                if (value_of(a) == kTrue) {
                    trail_limits_.push_back(trail_.size());  // dummy level
                } else if (value_of(a) == kFalse) {
                    result.status = SolveStatus::Unsatisfiable;
                    result.stats = stats_;
                    return result;
                } else {
                    decision = a;
                    assumption_pending = true;
                    break;
                }
            }
            if (decision < 0) {
                while (!heap_.empty()) {
                    const int v = heap_.pop();
                    if (value_[static_cast<size_t>(v)] == kUnassigned) {
                        decision = 2 * v + phase_[static_cast<size_t>(v)];
                        break;
                    }
                }
            }
            if (decision < 0) {
                result.status = SolveStatus::Satisfiable;
                result.model = extract_model();
                result.stats = stats_;
                return result;
            }
            if (!assumption_pending) ++stats_.decisions;
            trail_limits_.push_back(trail_.size());
            enqueue(decision, -1);
        }
    }

  private:
    int8_t value_of(int lit) const {
        const int8_t v = value_[static_cast<size_t>(var_of(lit))];
        return (lit & 1) ? static_cast<int8_t>(-v) : v;
    }

    size_t decision_level() const { return trail_limits_.size(); }

    bool enqueue(int lit, int reason) {
        const int8_t current = value_of(lit);
        if (current == kTrue) return true;
        if (current == kFalse) return false;
        const int v = var_of(lit);
        value_[static_cast<size_t>(v)] = (lit & 1) ? kFalse : kTrue;
        level_[static_cast<size_t>(v)] = static_cast<int>(decision_level());
        reason_[static_cast<size_t>(v)] = reason;
        trail_.push_back(lit);
        return true;
    }

    int32_t* clause_lits(const Clause& c) { return arena_.data() + c.offset; }

    // watches_[L] lists the clauses currently watching literal L; they are
    // revisited exactly when L becomes false.
    int attach(const std::vector<int32_t>& lits, bool learned) {
        const int id = static_cast<int>(clauses_.size());
        clauses_.push_back(
            Clause{arena_.size(), static_cast<uint32_t>(lits.size()), 0.0f, learned});
        arena_.insert(arena_.end(), lits.begin(), lits.end());
        watches_[static_cast<size_t>(lits[0])].push_back({id, lits[1]});
        watches_[static_cast<size_t>(lits[1])].push_back({id, lits[0]});
        if (learned) {
            ++learned_count_;
            ++stats_.learned_clauses;
            bump_clause(static_cast<size_t>(id));
        }
        return id;
    }

    /// Runs unit propagation from the current queue position; returns the
    /// index of a conflicting clause, or -1.
    int propagate() {
        while (queue_head_ < trail_.size()) {
            const int lit = trail_[queue_head_++];
            ++stats_.propagations;
            const int false_lit = negate(lit);
            auto& watch_list = watches_[static_cast<size_t>(false_lit)];
            size_t keep = 0;
            for (size_t i = 0; i < watch_list.size(); ++i) {
                const Watcher watcher = watch_list[i];
                if (value_of(watcher.blocker) == kTrue) {
                    watch_list[keep++] = watcher;
                    continue;
                }
                Clause& clause = clauses_[static_cast<size_t>(watcher.clause)];
                int32_t* lits = clause_lits(clause);
                if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
                const int first = lits[0];
                if (first != watcher.blocker && value_of(first) == kTrue) {
                    watch_list[keep++] = {watcher.clause, first};
                    continue;
                }
                bool moved = false;
                for (uint32_t k = 2; k < clause.size; ++k) {
                    if (value_of(lits[k]) != kFalse) {
                        std::swap(lits[1], lits[k]);
                        watches_[static_cast<size_t>(lits[1])].push_back(
                            {watcher.clause, first});
                        moved = true;
                        break;
                    }
                }
                if (moved) continue;
                if (value_of(first) == kFalse) {  // conflict
                    for (size_t j = i; j < watch_list.size(); ++j) {
                        watch_list[keep++] = watch_list[j];
                    }
                    watch_list.resize(keep);
                    queue_head_ = trail_.size();
                    return watcher.clause;
                }
                enqueue(first, watcher.clause);
                watch_list[keep++] = {watcher.clause, first};
            }
            watch_list.resize(keep);
        }
        return -1;
    }

    bool propagate_to_fixpoint() { return propagate() < 0; }

    /// First-UIP conflict analysis. learnt[0] is the asserting literal;
    /// backtrack_level is the second-highest level in the clause.
    void analyze(int conflict, std::vector<int32_t>& learnt, int& backtrack_level) {
        learnt.assign(1, 0);
        int counter = 0;
        int lit = -1;
        size_t index = trail_.size();

        int clause_id = conflict;
        do {
            Clause& clause = clauses_[static_cast<size_t>(clause_id)];
            if (clause.learned) bump_clause(static_cast<size_t>(clause_id));
            const int32_t* lits = clause_lits(clause);
            const uint32_t start = lit == -1 ? 0 : 1;
            for (uint32_t k = start; k < clause.size; ++k) {
                const int q = lits[k];
                const int v = var_of(q);
                if (seen_[static_cast<size_t>(v)] || level_[static_cast<size_t>(v)] == 0) {
                    continue;
                }
                seen_[static_cast<size_t>(v)] = 1;
                to_clear_.push_back(v);
                bump_variable(v);
                if (level_[static_cast<size_t>(v)] >= static_cast<int>(decision_level())) {
                    ++counter;
                } else {
                    learnt.push_back(q);
                }
            }
            while (!seen_[static_cast<size_t>(var_of(trail_[--index]))]) {
            }
            lit = trail_[index];
            clause_id = reason_[static_cast<size_t>(var_of(lit))];
            seen_[static_cast<size_t>(var_of(lit))] = 0;
            --counter;
        } while (counter > 0);
        learnt[0] = negate(lit);

        if (learnt.size() == 1) {
            backtrack_level = 0;
        } else {
            size_t max_pos = 1;
            for (size_t i = 2; i < learnt.size(); ++i) {
                if (level_[static_cast<size_t>(var_of(learnt[i]))] >
                    level_[static_cast<size_t>(var_of(learnt[max_pos]))]) {
                    max_pos = i;
                }
            }
            std::swap(learnt[1], learnt[max_pos]);
            backtrack_level = level_[static_cast<size_t>(var_of(learnt[1]))];
        }
        for (const int v : to_clear_) seen_[static_cast<size_t>(v)] = 0;
        to_clear_.clear();
    }

    void backtrack(int target_level) {
        if (static_cast<int>(decision_level()) <= target_level) return;
        const size_t new_end = trail_limits_[static_cast<size_t>(target_level)];
        for (size_t i = trail_.size(); i > new_end;) {
            --i;
            const int v = var_of(trail_[i]);
            phase_[static_cast<size_t>(v)] = trail_[i] & 1;
            value_[static_cast<size_t>(v)] = kUnassigned;
            reason_[static_cast<size_t>(v)] = -1;
            heap_.insert(v);
        }
        trail_.resize(new_end);
        trail_limits_.resize(static_cast<size_t>(target_level));
        queue_head_ = trail_.size();
    }

    void bump_variable(int v) {
        activity_[static_cast<size_t>(v)] += variable_bump_;
        if (activity_[static_cast<size_t>(v)] > 1e100) {
            for (double& a : activity_) a *= 1e-100;
            variable_bump_ *= 1e-100;
        }
        heap_.increased(v);
    }

    void bump_clause(size_t id) {
        clauses_[id].activity += static_cast<float>(clause_bump_);
        if (clauses_[id].activity > 1e20f) {
            for (Clause& c : clauses_) c.activity *= 1e-20f;
            clause_bump_ *= 1e-20;
        }
    }

    void decay_activities() {
        variable_bump_ /= 0.95;
        clause_bump_ /= 0.999;
    }

    /// Drops the lower-activity half of the learned clauses (keeping reasons
    /// of current assignments and binary clauses), compacts the literal
    /// arena, rebuilds the watch lists, and remaps reason indices. Only
    /// called at decision level 0.
    void reduce_learned() {
        std::vector<char> locked(clauses_.size(), 0);
        for (const int lit : trail_) {
            const int r = reason_[static_cast<size_t>(var_of(lit))];
            if (r >= 0) locked[static_cast<size_t>(r)] = 1;
        }

        std::vector<int> learned_ids;
        for (size_t i = 0; i < clauses_.size(); ++i) {
            if (clauses_[i].learned && !locked[i] && clauses_[i].size > 2) {
                learned_ids.push_back(static_cast<int>(i));
            }
        }
        std::sort(learned_ids.begin(), learned_ids.end(), [&](int a, int b) {
            const float x = clauses_[static_cast<size_t>(a)].activity;
            const float y = clauses_[static_cast<size_t>(b)].activity;
            return x < y || (x == y && a < b);
        });
        std::vector<char> drop(clauses_.size(), 0);
        for (size_t i = 0; i < learned_ids.size() / 2; ++i) {
            drop[static_cast<size_t>(learned_ids[i])] = 1;
        }

        // Kept clauses only move left, so the arena compacts in place.
        std::vector<int> remap(clauses_.size(), -1);
        size_t next = 0;
        uint64_t write = 0;
        for (size_t i = 0; i < clauses_.size(); ++i) {
            if (drop[i]) continue;
            remap[i] = static_cast<int>(next);
            Clause c = clauses_[i];
            if (write != c.offset) {
                std::copy(arena_.begin() + static_cast<ptrdiff_t>(c.offset),
                          arena_.begin() + static_cast<ptrdiff_t>(c.offset + c.size),
                          arena_.begin() + static_cast<ptrdiff_t>(write));
            }
            c.offset = write;
            write += c.size;
            clauses_[next++] = c;
        }
        clauses_.resize(next);
        arena_.resize(write);
        learned_count_ = 0;
        for (const Clause& c : clauses_) learned_count_ += c.learned ? 1 : 0;

        for (auto& list : watches_) list.clear();
        for (size_t i = 0; i < clauses_.size(); ++i) {
            const int32_t* lits = clause_lits(clauses_[i]);
            watches_[static_cast<size_t>(lits[0])].push_back({static_cast<int>(i), lits[1]});
            watches_[static_cast<size_t>(lits[1])].push_back({static_cast<int>(i), lits[0]});
        }
        for (int& r : reason_) {
            if (r >= 0) r = remap[static_cast<size_t>(r)];
        }
    }

    Coloring extract_model() const {
        Coloring coloring;
        coloring.colors.resize(static_cast<size_t>(num_vars_), Color::Red);
        for (int v = 0; v < num_vars_; ++v) {
            coloring.colors[static_cast<size_t>(v)] =
                value_[static_cast<size_t>(v)] == kFalse ? Color::Blue : Color::Red;
        }
        return coloring;
    }

    int num_vars_;
    bool ok_ = true;
    std::vector<int8_t> value_;
    std::vector<int> level_;
    std::vector<int> reason_;
    std::vector<int8_t> phase_;
    std::vector<double> activity_;
    std::vector<char> seen_;
    std::vector<int> to_clear_;
    std::vector<std::vector<Watcher>> watches_;
    std::vector<Clause> clauses_;
    std::vector<int32_t> arena_;
    size_t learned_count_ = 0;
    std::vector<int> trail_;
    std::vector<size_t> trail_limits_;
    size_t queue_head_ = 0;
    std::vector<int> assumptions_;
    VarHeap heap_;
    double variable_bump_ = 1.0;
    double clause_bump_ = 1.0;
    SolveStats stats_;
};

}  // namespace

SolveResult sat_solve(const CnfEncoding& encoding, std::span<const Assumption> assumptions) {
    CdclSolver solver(encoding, assumptions);
    return solver.solve();
}

std::optional<Coloring> decide_col(const Graph& graph, int k) {
    const CnfEncoding encoding = encode_nae_cycles(graph, k);
    std::vector<Assumption> assumptions;
    if (graph.num_vertices() > 0) assumptions.push_back({0, Color::Red});
    const SolveResult result = sat_solve(encoding, assumptions);
    return result.model;
}

bool check_forcing(const Graph& graph, int k, int x, int y) {
    if (x < 0 || y < 0 || x >= graph.num_vertices() || y >= graph.num_vertices() || x == y) {
        throw std::invalid_argument("check_forcing: invalid vertex pair");
    }
    const CnfEncoding encoding = encode_nae_cycles(graph, k);
    std::vector<Assumption> symmetry = {{0, Color::Red}};
    if (sat_solve(encoding, symmetry).status != SolveStatus::Satisfiable) {
        return false;  // forcing is vacuous on uncolorable graphs
    }
    std::vector<Assumption> both_red = {{x, Color::Red}, {y, Color::Red}};
    return sat_solve(encoding, both_red).status == SolveStatus::Unsatisfiable;
}

}  // namespace naecol
