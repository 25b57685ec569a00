#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "keyroom/layout.hpp"

namespace keyroom {

enum class Action : std::uint8_t {
    GoNorth = 0,
    GoEast = 1,
    GoSouth = 2,
    GoWest = 3,
    PickUp = 4,
    Apply = 5,
};

inline constexpr std::array<Action, 6> kAllActions = {
    Action::GoNorth, Action::GoEast, Action::GoSouth, Action::GoWest,
    Action::PickUp,  Action::Apply,
};

// Prompt-facing names as the environment documents them: "go north", ...,
// "pickup", "apply".
std::string action_name(Action a);
std::optional<Action> action_from_name(const std::string& name);
std::optional<Action> action_from_id(int id);

enum class SubgoalEvent : std::uint8_t {
    None = 0,
    KeyPickedUp = 1,
    DoorUnlocked = 2,
};

// "pick up the key" / "open the door" / "none"
std::string canonical_subgoal_name(SubgoalEvent e);

inline constexpr const char* kPickupSubgoal = "pick up the key";
inline constexpr const char* kUnlockSubgoal = "open the door";

inline constexpr const char* kWallMessage = "It's a wall.";
inline constexpr const char* kPickupMessage = "g - a key named The Master Key of Thievery.";

// Immutable-after-step value snapshot. The layout is shared by pointer; states
// produced by step() alias the same layout object.
struct GridState {
    std::shared_ptr<const GridLayout> layout;
    Coord agent_pos;
    std::optional<Coord> key_on_floor;
    bool key_held = false;
    bool door_locked = true;
    std::string last_message;
    int step_count = 0;
    bool terminated = false;

    bool operator==(const GridState& other) const {
        return agent_pos == other.agent_pos && key_on_floor == other.key_on_floor &&
               key_held == other.key_held && door_locked == other.door_locked &&
               last_message == other.last_message && step_count == other.step_count &&
               terminated == other.terminated && layout_equal(other);
    }

    bool layout_equal(const GridState& other) const {
        if (layout == other.layout) return true;
        if (!layout || !other.layout) return false;
        return *layout == *other.layout;
    }
};

GridState initial_state(std::shared_ptr<const GridLayout> layout);

struct StepResult {
    GridState next;
    int task_reward = 0;  // 1 exactly when next.terminated
    SubgoalEvent event = SubgoalEvent::None;
};

// Deterministic transition function. Throws std::logic_error if the state is
// already terminated (contract violation, not a silent no-op).
StepResult step(const GridState& state, Action action);

// Pure function of the two snapshots; matches the event step() emits for every
// legal transition.
SubgoalEvent detect_event(const GridState& before, const GridState& after);

struct Transition {
    GridState before;
    Action action = Action::GoNorth;
    GridState after;
    int task_reward = 0;
    SubgoalEvent event = SubgoalEvent::None;
    std::string id;  // stable hex hash of (before, action)
};

Transition make_transition(const GridState& before, Action action);

// Stable across runs/platforms. Covers the layout, the verdict-relevant state
// fields and the action; step_count is excluded so re-encounters of the same
// logical transition share one id (and one cached verdict).
std::string transition_id(const GridState& before, Action action);

}  // namespace keyroom
