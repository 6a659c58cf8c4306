#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "posy/core.hpp"

namespace posy::mdp {

/// One action of a state: a substochastic transition vector and its reward.
struct Action {
    QVector p;
    Rational reward;
};

/// n states, each with a nonempty list of actions whose transition vectors satisfy
/// p >= 0 and sum p <= 1 exactly.
class MdpModel {
public:
    MdpModel() = default;
    /// Throws InvalidInput on an empty action set or a vector outside the simplex.
    explicit MdpModel(std::vector<std::vector<Action>> actions);

    std::size_t states() const { return actions_.size(); }
    const std::vector<Action>& actions(std::size_t state) const { return actions_[state]; }
    const std::vector<std::vector<Action>>& actions() const { return actions_; }

private:
    std::vector<std::vector<Action>> actions_;
};

/// Color i holds the exponents p - e_i with coefficients c_p, so P(v) = 0 reads
/// v_i = max_p (c_p + <p,v>).
TropicalSystem to_tropical(const MdpModel& model);

/// Every state has an action with sum p < 1.
bool is_discounted(const MdpModel& model);

/// T_i(v) = max_p (c_p + <p,v>) in double precision.
std::vector<double> bellman(const MdpModel& model, const std::vector<double>& v);

/// Exact Bellman operator.
QVector bellman(const MdpModel& model, const QVector& v);

/// Plain Bellman iteration from v = 0 until the sup-norm change drops below tol; the
/// returned v has ||v - T(v)||_inf <= tol. Throws NotDiscounted, MaxIterations.
std::vector<double> value_iteration(const MdpModel& model, double tol, std::size_t max_iterations = 1000000);

/// Exact value vector through solve_tropical with y = (-1, ..., -1). Throws NotDiscounted.
QVector solve_mdp(const MdpModel& model);

/// Random discounted model: probabilities with denominator 16, every action has
/// sum p <= 15/16 and the first action of each state sum p <= 7/8; rewards are
/// multiples of 1/4 in [-5, 5].
MdpModel random_discounted_model(std::mt19937_64& rng, std::size_t states, std::size_t max_actions);

}  // namespace posy::mdp
