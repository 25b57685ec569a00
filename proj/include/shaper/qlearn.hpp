#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "keyroom/search.hpp"
#include "shaper/shaping.hpp"

namespace shaper {

struct QHyperparams {
    double alpha = 0.1;
    double gamma = 0.99;
    double epsilon_start = 1.0;
    double epsilon_end = 0.05;
    double epsilon_decay_fraction = 0.6;  // linear decay over this share of episodes
    int episodes = 500;
    int step_cap = 200;
};

// (state signature, action) -> value. The signature drops step_count so the
// table stays small.
struct QTable {
    std::unordered_map<std::uint32_t, std::array<double, 6>> values;

    double get(std::uint32_t sig, keyroom::Action a) const;
    void set(std::uint32_t sig, keyroom::Action a, double v);
    double max_value(std::uint32_t sig) const;
    keyroom::Action greedy_action(std::uint32_t sig) const;  // ties -> lowest action index
};

struct EpisodeStat {
    int episode = 0;
    double shaped_return = 0.0;
    double task_return = 0.0;
    int steps = 0;
    bool success = false;
};

struct LearningCurve {
    std::vector<EpisodeStat> episodes;
    QTable table;

    // episodes+1 when no episode succeeded
    int episodes_to_first_success() const;
    double success_rate_tail(int window) const;
};

// Tabular one-step TD control with epsilon-greedy exploration on one layout.
// `shaping` = nullopt trains on the raw task reward. Deterministic given the
// seeds.
LearningCurve q_learn(const keyroom::GridLayout& layout,
                      const std::optional<ShapingConfig>& shaping, const QHyperparams& hp,
                      std::uint64_t run_seed);

}  // namespace shaper
