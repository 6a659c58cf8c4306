#include "posy/mdp.hpp"

#include <algorithm>
#include <cmath>

#include "posy/errors.hpp"
#include "posy/tropical.hpp"

namespace posy::mdp {

MdpModel::MdpModel(std::vector<std::vector<Action>> actions) : actions_(std::move(actions)) {
    const std::size_t n = actions_.size();
    if (n == 0) throw InvalidInput("MdpModel: no states");
    for (std::size_t i = 0; i < n; ++i) {
        if (actions_[i].empty()) throw InvalidInput("MdpModel: state " + std::to_string(i) + " has no action");
        for (const auto& action : actions_[i]) {
            if (action.p.size() != n) throw DimensionMismatch("MdpModel: transition vector has wrong length");
            Rational total = 0;
            for (const auto& q : action.p) {
                if (q < 0) throw InvalidInput("MdpModel: negative transition probability");
                total += q;
            }
            if (total > 1) throw InvalidInput("MdpModel: transition probabilities sum above 1");
        }
    }
}

TropicalSystem to_tropical(const MdpModel& model) {
    const std::size_t n = model.states();
    std::vector<std::vector<Term>> colors(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& action : model.actions(i)) {
            QVector a = action.p;
            a[i] -= 1;
            colors[i].push_back({std::move(a), action.reward});
        }
    }
    return TropicalSystem::from_terms(n, colors);
}

bool is_discounted(const MdpModel& model) {
    for (const auto& state : model.actions()) {
        bool leaks = std::any_of(state.begin(), state.end(), [](const Action& a) {
            Rational total = 0;
            for (const auto& q : a.p) total += q;
            return total < 1;
        });
        if (!leaks) return false;
    }
    return true;
}

std::vector<double> bellman(const MdpModel& model, const std::vector<double>& v) {
    std::vector<double> out(model.states());
    for (std::size_t i = 0; i < model.states(); ++i) {
        double best = -HUGE_VAL;
        for (const auto& action : model.actions(i)) {
            double value = to_double(action.reward);
            for (std::size_t j = 0; j < v.size(); ++j) value += to_double(action.p[j]) * v[j];
            best = std::max(best, value);
        }
        out[i] = best;
    }
    return out;
}

QVector bellman(const MdpModel& model, const QVector& v) {
    QVector out(model.states());
    for (std::size_t i = 0; i < model.states(); ++i) {
        const auto& actions = model.actions(i);
        for (std::size_t k = 0; k < actions.size(); ++k) {
            Rational value = actions[k].reward + dot(actions[k].p, v);
            if (k == 0 || value > out[i]) out[i] = value;
        }
    }
    return out;
}

std::vector<double> value_iteration(const MdpModel& model, double tol, std::size_t max_iterations) {
    if (!is_discounted(model)) throw NotDiscounted("value_iteration: model is not of discounted type");
    std::vector<double> v(model.states(), 0.0);
    for (std::size_t it = 0; it < max_iterations; ++it) {
        std::vector<double> next = bellman(model, v);
        double change = 0;
        for (std::size_t i = 0; i < v.size(); ++i) change = std::max(change, std::abs(next[i] - v[i]));
        if (change <= tol) return v;
        v = std::move(next);
    }
    throw MaxIterations("value_iteration: no convergence within " + std::to_string(max_iterations) + " sweeps");
}

QVector solve_mdp(const MdpModel& model) {
    if (!is_discounted(model)) throw NotDiscounted("solve_mdp: model is not of discounted type");
    QVector y(model.states(), Rational(-1));
    auto report = tropical::solve_tropical(to_tropical(model), y, true);
    if (bellman(model, report.x) != report.x) throw InternalInvariant("solve_mdp: Bellman residual is not zero");
    return report.x;
}

MdpModel random_discounted_model(std::mt19937_64& rng, std::size_t states, std::size_t max_actions) {
    constexpr int denominator = 16;
    std::uniform_int_distribution<std::size_t> action_count(1, std::max<std::size_t>(1, max_actions));
    std::uniform_int_distribution<std::size_t> target(0, states - 1);
    std::uniform_int_distribution<int> reward(-20, 20);

    std::vector<std::vector<Action>> actions(states);
    for (std::size_t i = 0; i < states; ++i) {
        const std::size_t count = action_count(rng);
        for (std::size_t k = 0; k < count; ++k) {
            const int cap = k == 0 ? 14 : 15;
            const int mass = std::uniform_int_distribution<int>(0, cap)(rng);
            std::vector<int> units(states, 0);
            for (int u = 0; u < mass; ++u) ++units[target(rng)];
            Action action;
            for (int u : units) action.p.emplace_back(u, denominator);
            action.reward = Rational(reward(rng), 4);
            actions[i].push_back(std::move(action));
        }
    }
    return MdpModel(std::move(actions));
}

}  // namespace posy::mdp
