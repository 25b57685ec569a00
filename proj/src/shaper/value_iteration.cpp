#include "shaper/value_iteration.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "keyroom/search.hpp"

namespace shaper {

using keyroom::Action;
using keyroom::GridState;

std::vector<GridState> enumerate_states(const keyroom::GridLayout& layout) {
    auto shared = std::make_shared<const keyroom::GridLayout>(layout);
    std::vector<GridState> states;
    for (int r = 0; r < layout.height; ++r) {
        for (int c = 0; c < layout.width; ++c) {
            if (!layout.walkable({r, c})) continue;
            for (bool key_held : {false, true}) {
                for (bool door_locked : {true, false}) {
                    GridState s;
                    s.layout = shared;
                    s.agent_pos = {r, c};
                    s.key_held = key_held;
                    if (!key_held && shared->key_spawn) s.key_on_floor = *shared->key_spawn;
                    s.door_locked = door_locked;
                    s.terminated = shared->goal_pos && s.agent_pos == *shared->goal_pos;
                    states.push_back(std::move(s));
                }
            }
        }
    }
    return states;
}

ValueIterationResult value_iteration(const keyroom::GridLayout& layout, ViReward reward,
                                     double gamma, double tolerance, int max_iterations,
                                     double argmax_tolerance) {
    if (gamma < 0.0 || gamma >= 1.0)
        throw std::runtime_error("value_iteration: gamma must be in [0, 1)");

    std::vector<GridState> states = enumerate_states(layout);
    std::unordered_map<std::uint32_t, std::size_t> index;
    for (std::size_t i = 0; i < states.size(); ++i)
        index[keyroom::state_signature(states[i])] = i;

    struct Edge {
        std::size_t next = 0;
        double r = 0.0;
    };
    // precomputed model: per state, per action
    std::vector<std::array<Edge, 6>> model(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const GridState& s = states[i];
        const double phi_s = progress_potential(s);
        for (Action a : keyroom::kAllActions) {
            Edge edge;
            if (s.terminated) {
                // absorbing self-loop, zero task reward
                edge.next = i;
                edge.r = 0.0;
                if (reward == ViReward::PotentialShaped) edge.r += gamma * phi_s - phi_s;
            } else {
                keyroom::StepResult step = keyroom::step(s, a);
                auto it = index.find(keyroom::state_signature(step.next));
                if (it == index.end())
                    throw std::runtime_error("value_iteration: successor outside the state space");
                edge.next = it->second;
                edge.r = step.task_reward;
                if (reward == ViReward::PotentialShaped)
                    edge.r += gamma * progress_potential(step.next) - phi_s;
            }
            model[i][static_cast<size_t>(a)] = edge;
        }
    }

    std::vector<double> values(states.size(), 0.0);
    std::vector<double> next_values(states.size(), 0.0);
    int iterations = 0;
    for (; iterations < max_iterations; ++iterations) {
        double max_change = 0.0;
        for (std::size_t i = 0; i < states.size(); ++i) {
            double best = -1e300;
            for (size_t a = 0; a < 6; ++a) {
                const Edge& e = model[i][a];
                best = std::max(best, e.r + gamma * values[e.next]);
            }
            next_values[i] = best;
            max_change = std::max(max_change, std::fabs(best - values[i]));
        }
        values.swap(next_values);
        if (max_change < tolerance) break;
    }
    if (iterations >= max_iterations)
        throw std::runtime_error("value_iteration: no convergence within iteration cap");

    ValueIterationResult result;
    result.iterations = iterations + 1;
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::uint32_t sig = keyroom::state_signature(states[i]);
        result.values[sig] = values[i];
        double best = -1e300;
        std::array<double, 6> q{};
        for (size_t a = 0; a < 6; ++a) {
            const Edge& e = model[i][a];
            q[a] = e.r + gamma * values[e.next];
            best = std::max(best, q[a]);
        }
        std::set<Action>& actions = result.optimal_actions[sig];
        for (size_t a = 0; a < 6; ++a)
            if (q[a] >= best - argmax_tolerance) actions.insert(static_cast<Action>(a));
    }
    return result;
}

}  // namespace shaper
