#include "naecol/formula.hpp"

#include <cctype>
#include <istream>
#include <random>
#include <sstream>

namespace naecol {
namespace {

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

bool parse_int(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    }
    try {
        out = std::stoll(tok);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

}  // namespace

Formula parse_dimacs(std::istream& in) {
    Formula formula;
    bool header_seen = false;
    long long declared_clauses = 0;
    Clause current;
    bool in_clause = false;
    int line_no = 0;
    int last_content_line = 0;

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "c" || tokens[0][0] == 'c') continue;
        last_content_line = line_no;

        if (!header_seen) {
            long long vars = 0, clauses = 0;
            if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf" ||
                !parse_int(tokens[2], vars) || !parse_int(tokens[3], clauses) || vars < 0 ||
                clauses < 0) {
                throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            formula.num_variables = static_cast<int>(vars);
            declared_clauses = clauses;
            header_seen = true;
            continue;
        }

        for (const std::string& tok : tokens) {
            long long lit = 0;
            if (!parse_int(tok, lit)) {
                throw DimacsError(line_no, "invalid token '" + tok + "' in clause data");
            }
            if (lit == 0) {
                if (current.empty()) {
                    throw DimacsError(line_no, "empty clause");
                }
                if (static_cast<long long>(formula.clauses.size()) == declared_clauses) {
                    throw DimacsError(line_no, "clause count mismatch: more clauses than declared");
                }
                formula.clauses.push_back(current);
                current.clear();
                in_clause = false;
                continue;
            }
            long long var = lit < 0 ? -lit : lit;
            if (var > formula.num_variables) {
                throw DimacsError(line_no, "literal " + tok + " out of declared variable range");
            }
            if (static_cast<long long>(formula.clauses.size()) == declared_clauses) {
                throw DimacsError(line_no, "clause count mismatch: more clauses than declared");
            }
            current.push_back(Literal{static_cast<int>(var), lit < 0});
            in_clause = true;
        }
    }

    if (!header_seen) {
        throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
    }
    if (in_clause) {
        throw DimacsError(last_content_line, "missing terminating 0 in last clause");
    }
    if (static_cast<long long>(formula.clauses.size()) != declared_clauses) {
        throw DimacsError(last_content_line == 0 ? line_no : last_content_line,
                          "clause count mismatch: declared " + std::to_string(declared_clauses) +
                              ", found " + std::to_string(formula.clauses.size()));
    }
    return formula;
}

Formula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

std::string serialize_dimacs(const Formula& formula) {
    std::ostringstream out;
    out << "p cnf " << formula.num_variables << ' ' << formula.clauses.size() << '\n';
    for (const Clause& clause : formula.clauses) {
        for (const Literal& lit : clause) {
            out << (lit.negated ? -lit.variable : lit.variable) << ' ';
        }
        out << "0\n";
    }
    return out.str();
}

bool eval_nae(const Formula& formula, const Assignment& assignment) {
    if (assignment.num_variables() < formula.num_variables) {
        throw std::invalid_argument("assignment covers " +
                                    std::to_string(assignment.num_variables()) +
                                    " variables, formula declares " +
                                    std::to_string(formula.num_variables));
    }
    for (const Clause& clause : formula.clauses) {
        bool any_true = false;
        bool any_false = false;
        for (const Literal& lit : clause) {
            bool v = assignment.value(lit.variable) != lit.negated;
            (v ? any_true : any_false) = true;
            if (any_true && any_false) break;
        }
        if (!(any_true && any_false)) return false;
    }
    return true;
}

std::optional<Assignment> brute_force_nae(const Formula& formula, int max_variables) {
    const int n = formula.num_variables;
    if (n > max_variables) {
        throw std::invalid_argument("brute_force_nae: " + std::to_string(n) +
                                    " variables exceeds cap of " + std::to_string(max_variables));
    }
    Assignment assignment;
    assignment.values.assign(static_cast<size_t>(n), false);
    const uint64_t limit = uint64_t{1} << n;
    for (uint64_t bits = 0; bits < limit; ++bits) {
        // Variable 1 is the most significant bit so that increasing `bits`
        // walks assignments in lexicographic order with false < true.
        for (int v = 1; v <= n; ++v) {
            assignment.values[static_cast<size_t>(v) - 1] = (bits >> (n - v)) & 1;
        }
        if (eval_nae(formula, assignment)) return assignment;
    }
    return std::nullopt;
}

Formula pad_to_width(const Formula& formula, int k) {
    if (k < 3) {
        throw std::invalid_argument("pad_to_width: k must be at least 3");
    }
    Formula padded;
    padded.num_variables = formula.num_variables;
    padded.clauses.reserve(formula.clauses.size());
    for (size_t i = 0; i < formula.clauses.size(); ++i) {
        const Clause& clause = formula.clauses[i];
        if (clause.size() < 2) {
            throw std::invalid_argument("pad_to_width: clause " + std::to_string(i + 1) +
                                        " has width 1 and cannot be NAE-satisfied");
        }
        if (clause.size() > static_cast<size_t>(k)) {
            throw std::invalid_argument("pad_to_width: clause " + std::to_string(i + 1) +
                                        " is wider than k=" + std::to_string(k));
        }
        Clause out(static_cast<size_t>(k) - clause.size(), clause.front());
        out.insert(out.end(), clause.begin(), clause.end());
        padded.clauses.push_back(std::move(out));
    }
    return padded;
}

Formula random_formula(int num_variables, int num_clauses, int width, uint64_t seed) {
    if (num_variables < 1 || num_clauses < 0 || width < 2) {
        throw std::invalid_argument("random_formula: needs >= 1 variable and width >= 2");
    }
    std::mt19937_64 rng(seed);
    Formula formula;
    formula.num_variables = num_variables;
    formula.clauses.reserve(static_cast<size_t>(num_clauses));
    for (int c = 0; c < num_clauses; ++c) {
        Clause clause;
        clause.reserve(static_cast<size_t>(width));
        for (int i = 0; i < width; ++i) {
            const int variable = static_cast<int>(rng() % static_cast<uint64_t>(num_variables));
            const bool negated = (rng() & 1) != 0;
            clause.push_back(Literal{variable + 1, negated});
        }
        formula.clauses.push_back(std::move(clause));
    }
    return formula;
}

}  // namespace naecol
