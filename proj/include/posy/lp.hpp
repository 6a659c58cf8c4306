#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "posy/rational.hpp"

// Dense two-phase simplex over an ordered field.
//
// Two entry points share one core:
//   * solve():          maximize <objective, x> s.t. <row_k, x> <= rhs_k, x free.
//   * solve_standard(): minimize <c, w> s.t. A w = b, w >= 0.
// The inequality form is mapped onto the standard form with x = x+ - x- and a slack
// per row. Every outcome carries a certificate (dual multipliers, Farkas combination,
// or recession ray). Instantiated for Rational (exact, Bland's rule) and double
// (largest coefficient with a Bland fallback, tolerance 1e-9).
namespace posy::lp {

enum class Status { Optimal, Infeasible, Unbounded };

std::string_view to_string(Status status);

enum class PivotRule {
    Bland,            ///< lowest-index entering variable; never cycles
    LargestCoefficient,  ///< Dantzig rule, switches to Bland after a run of degenerate pivots
    Default,          ///< Bland for Rational, LargestCoefficient for double
};

struct Options {
    PivotRule rule = PivotRule::Default;
    std::size_t max_iterations = 0;  ///< 0 selects 50 * (rows + columns) + 1000
};

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
struct StandardProblem {
    Mat<T> a;  ///< m rows of length N
    Vec<T> b;
    Vec<T> c;  ///< length N
};

template <class T>
struct StandardSolution {
    Status status = Status::Infeasible;
    Vec<T> w;          ///< Optimal/Unbounded: basic feasible point
    Vec<T> duals;      ///< Optimal: A^T pi <= c; Infeasible: A^T pi <= 0 and <b,pi> > 0
    Vec<T> direction;  ///< Unbounded: d >= 0, A d = 0, <c,d> < 0
    std::vector<std::size_t> basis;
    T value{};
    std::size_t iterations = 0;
};

template <class T>
StandardSolution<T> solve_standard(const StandardProblem<T>& problem, const Options& options = {});

template <class T>
struct Problem {
    Vec<T> objective;  ///< maximize <objective, x>
    Mat<T> rows;       ///< <rows[k], x> <= rhs[k]
    Vec<T> rhs;

    Problem() = default;
    explicit Problem(std::size_t dimension) : objective(dimension, T(0)) {}

    std::size_t dimension() const { return objective.size(); }
    void add_row(Vec<T> row, T bound) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(bound));
    }
};

template <class T>
struct Solution {
    Status status = Status::Infeasible;
    Vec<T> x;       ///< primal optimum (Optimal), feasible point (Unbounded)
    Vec<T> dual;    ///< Optimal: mu >= 0 with sum mu_k row_k = objective
    Vec<T> farkas;  ///< Infeasible: mu >= 0, sum mu_k row_k = 0, <rhs,mu> = -1
    Vec<T> ray;     ///< Unbounded: row_k . r <= 0 for all k, <objective,r> = 1
    T value{};
    std::vector<std::size_t> basis;  ///< basic columns in the split (x+, x-, slack) layout
};

template <class T>
Solution<T> solve(const Problem<T>& problem, const Options& options = {});

template <class T>
struct Feasibility {
    std::optional<Vec<T>> point;
    Vec<T> farkas;  ///< set when point is empty
};

/// Any x with <row_k, x> <= rhs_k for all k, or a Farkas certificate.
template <class T>
Feasibility<T> feasible_point(const Mat<T>& rows, const Vec<T>& rhs, const Options& options = {});

using QProblem = Problem<Rational>;
using QSolution = Solution<Rational>;
using DProblem = Problem<double>;
using DSolution = Solution<double>;

}  // namespace posy::lp
