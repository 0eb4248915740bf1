#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace naecol {

/// A literal is a 1-based variable index with an optional negation.
struct Literal {
    int variable = 0;
    bool negated = false;

    friend bool operator==(const Literal&, const Literal&) = default;
};

/// A clause is a non-empty sequence of literals. Duplicate literals are kept
/// as-is: clauses are occurrence lists, not sets.
using Clause = std::vector<Literal>;

/// A CNF formula interpreted under not-all-equal semantics: a clause is
/// satisfied when it contains at least one true and at least one false
/// literal.
struct Formula {
    int num_variables = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Total truth assignment for variables 1..num_variables.
struct Assignment {
    std::vector<bool> values;  // values[i] is the value of variable i+1

    bool value(int variable) const { return values.at(static_cast<size_t>(variable) - 1); }
    int num_variables() const { return static_cast<int>(values.size()); }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Error raised by the DIMACS parser; `line` is the 1-based input line the
/// problem was detected on.
class DimacsError : public std::runtime_error {
  public:
    DimacsError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/// Parses DIMACS CNF: optional leading 'c' comment lines, a 'p cnf <vars>
/// <clauses>' header, then clauses as 0-terminated literal runs. Comments are
/// also allowed between clauses. Throws DimacsError on malformed input.
Formula parse_dimacs(std::istream& in);
Formula parse_dimacs(const std::string& text);

/// Serializes to DIMACS with one clause per line and no comments, so that
/// parse(serialize(f)) == f.
std::string serialize_dimacs(const Formula& formula);

/// True when every clause has at least one true and at least one false
/// literal under `assignment`. Throws std::invalid_argument when the
/// assignment does not cover the formula's variables.
bool eval_nae(const Formula& formula, const Assignment& assignment);

/// Exhaustive NAE-satisfiability check. Returns the lexicographically first
/// model (variable 1 most significant, false < true), or nullopt when none
/// exists. Throws std::invalid_argument when num_variables > max_variables.
std::optional<Assignment> brute_force_nae(const Formula& formula, int max_variables = 24);

/// Pads every clause to exactly `k` literals by prepending copies of the
/// clause's first literal, which preserves the NAE model set. Clauses of
/// width 1 (NAE-unsatisfiable on their own) and width > k are rejected with
/// std::invalid_argument.
Formula pad_to_width(const Formula& formula, int k);

/// Uniformly random clauses of exactly `width` literals (variables and signs
/// drawn independently). Deterministic for a given seed on every platform:
/// only the standardized mt19937_64 output stream is consumed, never a
/// distribution object.
Formula random_formula(int num_variables, int num_clauses, int width, uint64_t seed);

}  // namespace naecol
