#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <string_view>
#include <vector>

#include "posy/core.hpp"

// 3-SAT to square posynomial systems, tropical and classical, with assignment encoders
// and a brute-force satisfiability oracle.
namespace posy::satgen {

struct Literal {
    std::size_t var;  ///< 0-based
    bool negated = false;
    bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

/// Clauses of exactly three literals on three distinct variables.
class Cnf {
public:
    Cnf() = default;
    /// Throws InvalidInput on an out-of-range or repeated variable inside a clause.
    Cnf(std::size_t vars, std::vector<Clause> clauses);

    std::size_t vars() const { return vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    bool satisfied_by(const std::vector<bool>& assignment) const;

private:
    std::size_t vars_ = 0;
    std::vector<Clause> clauses_;
};

/// DIMACS "p cnf <vars> <clauses>" with zero-terminated clauses; a line starting with
/// '%' ends the clause list. Throws InvalidInput.
Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs(std::string_view text);

/// Positions of the 2n + 2p variables in the order x, y, z, s. Equations follow the
/// same block order: one choice row per variable, one product row per variable, one
/// row per clause, one slack row per clause.
struct Layout {
    std::size_t n = 0;
    std::size_t p = 0;

    explicit Layout(const Cnf& f) : n(f.vars()), p(f.clauses().size()) {}
    std::size_t size() const { return 2 * n + 2 * p; }
    std::size_t x(std::size_t i) const { return i; }
    std::size_t y(std::size_t i) const { return n + i; }
    std::size_t z(std::size_t j) const { return 2 * n + j; }
    std::size_t s(std::size_t j) const { return 2 * n + p + j; }
    /// x_i for a positive literal, y_i for a negated one
    std::size_t literal(const Literal& l) const { return l.negated ? y(l.var) : x(l.var); }
};

/// Rows max(x_i - 1, y_i - 1), x_i + y_i - 1, max over the clause literals of
/// (lit - z_j), and max(1/2 - z_j, s_j - z_j).
TropicalSystem cnf_to_tropical(const Cnf& f);

/// Rows (2/5) x_i + (2/5) y_i, x_i y_i, sum over the clause of (1/6) lit z_j^{-1}, and
/// (1/3) z_j^{-1} + s_j z_j^{-1}.
ClassicalSystem cnf_to_classical(const Cnf& f);

enum class Kind { Tropical, Classical };

/// Solution of the generated system built from a satisfying assignment.
/// Tropical: x in {0,1}, y = 1 - x, z = s = 1. Classical: x in {2, 1/2}, y = 1/x,
/// z = (literal sum)/6, s = z - 1/3. Throws UnsatisfiedAssignment.
QVector encode_assignment(const Cnf& f, const std::vector<bool>& assignment, Kind kind);

/// First satisfying assignment in lexicographic order (false < true, first variable
/// most significant). Throws TooLarge above 20 variables.
std::optional<std::vector<bool>> sat_oracle(const Cnf& f);

}  // namespace posy::satgen
