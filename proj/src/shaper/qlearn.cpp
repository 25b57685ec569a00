#include "shaper/qlearn.hpp"

#include <algorithm>

#include "support/rng.hpp"

namespace shaper {

using keyroom::Action;
using keyroom::GridState;
using keyroom::Transition;

double QTable::get(std::uint32_t sig, Action a) const {
    auto it = values.find(sig);
    return it == values.end() ? 0.0 : it->second[static_cast<size_t>(a)];
}

void QTable::set(std::uint32_t sig, Action a, double v) {
    auto it = values.find(sig);
    if (it == values.end()) it = values.emplace(sig, std::array<double, 6>{}).first;
    it->second[static_cast<size_t>(a)] = v;
}

double QTable::max_value(std::uint32_t sig) const {
    auto it = values.find(sig);
    if (it == values.end()) return 0.0;
    return *std::max_element(it->second.begin(), it->second.end());
}

Action QTable::greedy_action(std::uint32_t sig) const {
    auto it = values.find(sig);
    if (it == values.end()) return Action::GoNorth;
    size_t best = 0;
    for (size_t a = 1; a < it->second.size(); ++a)
        if (it->second[a] > it->second[best]) best = a;
    return static_cast<Action>(best);
}

int LearningCurve::episodes_to_first_success() const {
    for (const auto& ep : episodes)
        if (ep.success) return ep.episode + 1;
    return static_cast<int>(episodes.size()) + 1;
}

double LearningCurve::success_rate_tail(int window) const {
    if (episodes.empty() || window <= 0) return 0.0;
    int from = std::max(0, static_cast<int>(episodes.size()) - window);
    int n = static_cast<int>(episodes.size()) - from;
    int wins = 0;
    for (int i = from; i < static_cast<int>(episodes.size()); ++i)
        if (episodes[static_cast<size_t>(i)].success) ++wins;
    return n > 0 ? static_cast<double>(wins) / n : 0.0;
}

LearningCurve q_learn(const keyroom::GridLayout& layout,
                      const std::optional<ShapingConfig>& shaping, const QHyperparams& hp,
                      std::uint64_t run_seed) {
    if (hp.episodes < 1) throw std::runtime_error("q_learn: episodes must be >= 1");
    auto shared_layout = std::make_shared<const keyroom::GridLayout>(layout);

    LearningCurve curve;
    curve.episodes.reserve(static_cast<size_t>(hp.episodes));
    support::SplitMix64 rng(support::derive_seed(run_seed, 0x71u));

    const int decay_episodes =
        std::max(1, static_cast<int>(hp.episodes * hp.epsilon_decay_fraction));

    for (int episode = 0; episode < hp.episodes; ++episode) {
        double epsilon =
            episode >= decay_episodes
                ? hp.epsilon_end
                : hp.epsilon_start +
                      (hp.epsilon_end - hp.epsilon_start) * episode / decay_episodes;

        GridState state = keyroom::initial_state(shared_layout);
        EpisodeStat stat;
        stat.episode = episode;
        bool pickup_paid = false, unlock_paid = false;

        for (int step_i = 0; step_i < hp.step_cap && !state.terminated; ++step_i) {
            std::uint32_t sig = keyroom::state_signature(state);
            Action action;
            if (rng.next_unit() < epsilon) {
                action = keyroom::kAllActions[rng.next_below(keyroom::kAllActions.size())];
            } else {
                // greedy with uniform tie-breaking, so an untrained table still explores
                double best = curve.table.max_value(sig);
                std::array<Action, 6> ties{};
                std::size_t n_ties = 0;
                for (Action a : keyroom::kAllActions)
                    if (curve.table.get(sig, a) >= best) ties[n_ties++] = a;
                action = ties[rng.next_below(n_ties)];
            }

            Transition t = keyroom::make_transition(state, action);
            double reward = t.task_reward;
            if (shaping) {
                ShapedReward shaped = shaped_reward(t, *shaping);
                reward = shaped.reward;
                if (shaping->mode == ShapingMode::Additive && shaping->once_per_episode &&
                    shaped.beta_fired) {
                    bool& paid = t.event == keyroom::SubgoalEvent::KeyPickedUp ? pickup_paid
                                                                               : unlock_paid;
                    if (paid) reward = t.task_reward;  // bonus already collected this episode
                    paid = true;
                }
            }

            std::uint32_t next_sig = keyroom::state_signature(t.after);
            double target = reward;
            if (!t.after.terminated) target += hp.gamma * curve.table.max_value(next_sig);
            double old_q = curve.table.get(sig, action);
            curve.table.set(sig, action, old_q + hp.alpha * (target - old_q));

            stat.shaped_return += reward;
            stat.task_return += t.task_reward;
            ++stat.steps;
            state = std::move(t.after);
        }
        stat.success = state.terminated;
        curve.episodes.push_back(stat);
    }
    return curve;
}

}  // namespace shaper
