#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "posy/core.hpp"
#include "posy/errors.hpp"

// Classical posynomial systems P(x) = 1 through the convex program
//   maximize <y,X>  s.t.  g_i(X) = log sum_{a in S_i} c_a e^{<a,X>} <= 0,
// whose KKT point with a colorful y satisfies g_i = 0 for every i, i.e. P(exp X) = 1.
namespace posy::gp {

struct Tolerances {
    double feasibility = 1e-6;  ///< bound on |g_i(X*)|
    double kkt = 1e-6;          ///< bound on the stationarity residual
};

/// A pointed classical system together with a colorful objective vector; both properties
/// are verified on construction (NotPointed / NotColorful).
class GpProblem {
public:
    GpProblem(ClassicalSystem sys, QVector y, Tolerances tol = {});

    const ClassicalSystem& system() const { return sys_; }
    const QVector& y() const { return y_; }
    const Tolerances& tolerances() const { return tol_; }

private:
    ClassicalSystem sys_;
    QVector y_;
    Tolerances tol_;
};

struct GEval {
    Eigen::VectorXd values;
    std::vector<Eigen::VectorXd> gradients;
    std::vector<Eigen::MatrixXd> hessians;
};

/// g_i, its gradient sum_a w_a a and Hessian sum_a w_a a a^T - grad grad^T, with softmax
/// weights w_a. Log-sum-exp is max-shifted. Throws InvalidInput on non-finite X.
GEval g_eval(const ClassicalSystem& sys, const Eigen::VectorXd& X);

/// h_i(X) = max_a (log c_a + <a,X>); h_i <= g_i <= h_i + log |S_i|.
Eigen::VectorXd tropical_bound(const ClassicalSystem& sys, const Eigen::VectorXd& X);

/// Strictly feasible point X0 = lambda z built from a pointedness witness z, with
/// h_i(X0) + log |S_i| + 1 <= 0, hence g_i(X0) <= -1. Throws NotPointed.
Eigen::VectorXd feasible_start(const ClassicalSystem& sys);

struct KktReport {
    Eigen::VectorXd X;
    Eigen::VectorXd x;       ///< exp(X)
    Eigen::VectorXd lambda;  ///< barrier multipliers 1 / (-t g_i)
    Eigen::VectorXd Z;       ///< sum_a c_a e^{<a,X>}
    Eigen::VectorXd g;
    double stationarity = 0;  ///< || y - sum_i lambda_i grad g_i ||_inf
    double barrier_t = 0;
    std::size_t newton_steps = 0;
};

class NotConverged : public MaxIterations {
public:
    NotConverged(const std::string& what, KktReport best) : MaxIterations(what), best_(std::move(best)) {}
    const KktReport& best() const { return best_; }

private:
    KktReport best_;
};

/// Feasible-start log barrier: minimize -t<y,X> - sum log(-g_i(X)) by damped Newton
/// (Armijo 1e-4, step halving), t = 1, 10, 100, ... until n/t < 1e-10.
/// Throws NotConverged (carrying the last iterate) if the KKT tolerances are not met.
KktReport solve_gp(const GpProblem& problem);

/// For a colorful y: every LP  max +-X_j  over  {log c_a + <a,X> <= 0, <y,X> >= mu}
/// has a bounded value (optimal or infeasible). log c_a is rationalized with
/// denominator <= max_denominator and the LPs run in exact arithmetic.
bool superlevel_bounded(const ClassicalSystem& sys, const QVector& y, const Rational& mu,
                        std::int64_t max_denominator = 1000000);

/// Random classical system with a known rational solution: exponents are integer
/// vectors in the closed negative orthant (diagonal entry in {-3,-2,-1}), and
/// coefficients are scaled so that P_i(solution) = 1 exactly.
struct Planted {
    ClassicalSystem system;
    QVector solution;
};

Planted planted_system(std::mt19937_64& rng, std::size_t n, std::size_t max_terms);

}  // namespace posy::gp
