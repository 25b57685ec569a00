#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "keyroom/state.hpp"
#include "shaper/shaping.hpp"

namespace shaper {

enum class ViReward : std::uint8_t {
    Sparse,           // task reward only
    PotentialShaped,  // task + gamma*phi(s') - phi(s), applied to every edge
};

struct ValueIterationResult {
    // keyed by state signature over the full (position x key x door) space
    std::unordered_map<std::uint32_t, double> values;
    std::unordered_map<std::uint32_t, std::set<keyroom::Action>> optimal_actions;
    int iterations = 0;
};

// Brute-force value iteration over the finite product state space. Terminal
// states are modeled as absorbing self-loops with zero task reward, and the
// shaping term is applied uniformly to every edge including those loops, so
// potential shaping provably preserves the optimal action sets. Converges to
// sup-norm `tolerance`; throws on non-convergence within `max_iterations`.
// The optimal set keeps every action within `argmax_tolerance` of the max.
ValueIterationResult value_iteration(const keyroom::GridLayout& layout, ViReward reward,
                                     double gamma, double tolerance = 1e-10,
                                     int max_iterations = 100000,
                                     double argmax_tolerance = 1e-9);

// All syntactic states of the layout: walkable positions x key x door.
std::vector<keyroom::GridState> enumerate_states(const keyroom::GridLayout& layout);

}  // namespace shaper
