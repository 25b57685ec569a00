#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "keyroom/state.hpp"

namespace keyroom {

// Compact signature of the fields that drive the dynamics. step_count and
// last_message are deliberately dropped (they never affect transitions).
std::uint32_t state_signature(const GridState& state);

struct SolveReport {
    bool solvable = false;          // key -> unlock -> goal trajectory exists
    std::size_t expanded = 0;       // BFS-expanded product states
    std::vector<Action> solution;   // one witness trajectory when solvable
};

// BFS over the reachable product state space (position x key x door) from the
// initial state. `max_expanded` bounds the search.
SolveReport solve(const GridState& start, std::size_t max_expanded = 10000);

// Visits every edge (state, action, step-result) reachable from `start`,
// in BFS order, until `max_expanded` distinct states have been expanded.
// With `distinct_messages` the message text is part of state identity, so
// every rendered-observation variant of a position is expanded; transition
// ids and prompts depend on the message, so verdict caches need this.
void for_each_reachable_edge(
    const GridState& start, std::size_t max_expanded,
    const std::function<void(const GridState&, Action, const StepResult&)>& visit,
    bool distinct_messages = false);

// Shortest walk (movement actions only) from the agent's position to `target`,
// honouring walls and the current door state. Empty optional when unreachable.
std::optional<std::vector<Action>> shortest_walk(const GridState& state, Coord target);

// Movement distance from `from` to `target` under the current door state;
// empty when unreachable. Independent oracle used by tests.
std::optional<int> walk_distance(const GridState& state, Coord from, Coord target);

// Scripted prefix used by assisted dataset rollouts: walk to the key, pick it
// up, walk next to the door, apply. Requires a fresh (unmodified) state.
std::optional<std::vector<Action>> scripted_key_door_prefix(const GridState& start);

}  // namespace keyroom
