#include "keyroom/state.hpp"

#include <stdexcept>

#include "support/hash.hpp"

namespace keyroom {

std::string action_name(Action a) {
    switch (a) {
        case Action::GoNorth: return "go north";
        case Action::GoEast: return "go east";
        case Action::GoSouth: return "go south";
        case Action::GoWest: return "go west";
        case Action::PickUp: return "pickup";
        case Action::Apply: return "apply";
    }
    return "?";
}

std::optional<Action> action_from_name(const std::string& name) {
    for (Action a : kAllActions)
        if (action_name(a) == name) return a;
    return std::nullopt;
}

std::optional<Action> action_from_id(int id) {
    if (id < 0 || id > 5) return std::nullopt;
    return static_cast<Action>(id);
}

std::string canonical_subgoal_name(SubgoalEvent e) {
    switch (e) {
        case SubgoalEvent::KeyPickedUp: return kPickupSubgoal;
        case SubgoalEvent::DoorUnlocked: return kUnlockSubgoal;
        case SubgoalEvent::None: return "none";
    }
    return "none";
}

GridState initial_state(std::shared_ptr<const GridLayout> layout) {
    if (!layout) throw std::runtime_error("initial_state: null layout");
    if (!layout->agent_spawn || !layout->key_spawn)
        throw std::runtime_error("initial_state: layout lacks spawn positions");
    GridState s;
    s.layout = std::move(layout);
    s.agent_pos = *s.layout->agent_spawn;
    s.key_on_floor = *s.layout->key_spawn;
    s.key_held = false;
    s.door_locked = true;
    s.last_message.clear();
    s.step_count = 0;
    s.terminated = false;
    return s;
}

namespace {

Coord move_target(Coord from, Action a) {
    switch (a) {
        case Action::GoNorth: return {from.row - 1, from.col};
        case Action::GoEast: return {from.row, from.col + 1};
        case Action::GoSouth: return {from.row + 1, from.col};
        case Action::GoWest: return {from.row, from.col - 1};
        default: return from;
    }
}

bool orthogonally_adjacent(Coord a, Coord b) {
    int dr = a.row - b.row, dc = a.col - b.col;
    return (dr == 0 && (dc == 1 || dc == -1)) || (dc == 0 && (dr == 1 || dr == -1));
}

}  // namespace

StepResult step(const GridState& state, Action action) {
    if (state.terminated) throw std::logic_error("step: state is terminated");
    if (!state.layout) throw std::runtime_error("step: state has no layout");
    const GridLayout& layout = *state.layout;

    StepResult result;
    result.next = state;
    GridState& next = result.next;
    next.step_count = state.step_count + 1;
    next.last_message.clear();

    switch (action) {
        case Action::GoNorth:
        case Action::GoEast:
        case Action::GoSouth:
        case Action::GoWest: {
            Coord target = move_target(state.agent_pos, action);
            CellKind kind = layout.at(target);
            bool blocked = kind == CellKind::WallH || kind == CellKind::WallV ||
                           kind == CellKind::Void ||
                           ((kind == CellKind::DoorClosed || kind == CellKind::DoorOpen) &&
                            state.door_locked);
            if (blocked) {
                next.last_message = kWallMessage;
            } else {
                next.agent_pos = target;
            }
            break;
        }
        case Action::PickUp: {
            if (!state.key_held && state.key_on_floor && *state.key_on_floor == state.agent_pos) {
                next.key_held = true;
                next.key_on_floor.reset();
                next.last_message = kPickupMessage;
                result.event = SubgoalEvent::KeyPickedUp;
            }
            break;
        }
        case Action::Apply: {
            if (state.key_held && state.door_locked && layout.door_pos &&
                orthogonally_adjacent(state.agent_pos, *layout.door_pos)) {
                next.door_locked = false;
                result.event = SubgoalEvent::DoorUnlocked;
            }
            break;
        }
    }

    if (layout.goal_pos && next.agent_pos == *layout.goal_pos) {
        next.terminated = true;
        result.task_reward = 1;
    }
    return result;
}

SubgoalEvent detect_event(const GridState& before, const GridState& after) {
    if (!before.key_held && after.key_held) return SubgoalEvent::KeyPickedUp;
    if (before.door_locked && !after.door_locked) return SubgoalEvent::DoorUnlocked;
    return SubgoalEvent::None;
}

Transition make_transition(const GridState& before, Action action) {
    StepResult r = step(before, action);
    Transition t;
    t.before = before;
    t.action = action;
    t.after = std::move(r.next);
    t.task_reward = r.task_reward;
    t.event = r.event;
    t.id = transition_id(before, action);
    return t;
}

std::string transition_id(const GridState& before, Action action) {
    support::Fnv1a64 h;
    h.update_u64(before.layout ? layout_fingerprint(*before.layout) : 0);
    h.update_i32(before.agent_pos.row).update_i32(before.agent_pos.col);
    h.update_i32(before.key_on_floor ? before.key_on_floor->row : -1);
    h.update_i32(before.key_on_floor ? before.key_on_floor->col : -1);
    h.update_u64(before.key_held ? 1 : 0);
    h.update_u64(before.door_locked ? 1 : 0);
    h.update(before.last_message);
    h.update_u64(static_cast<std::uint64_t>(action));
    return h.hex();
}

}  // namespace keyroom
