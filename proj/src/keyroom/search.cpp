#include "keyroom/search.hpp"

#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace keyroom {

std::uint32_t state_signature(const GridState& state) {
    // rows/cols fit in 7 bits each for any layout that fits the 21x79 canvas
    std::uint32_t sig = 0;
    sig |= static_cast<std::uint32_t>(state.agent_pos.row & 0x7f);
    sig |= static_cast<std::uint32_t>(state.agent_pos.col & 0x7f) << 7;
    sig |= (state.key_held ? 1u : 0u) << 14;
    sig |= (state.door_locked ? 1u : 0u) << 15;
    sig |= (state.terminated ? 1u : 0u) << 16;
    return sig;
}

void for_each_reachable_edge(
    const GridState& start, std::size_t max_expanded,
    const std::function<void(const GridState&, Action, const StepResult&)>& visit,
    bool distinct_messages) {
    auto key_of = [&](const GridState& s) {
        std::string key = std::to_string(state_signature(s));
        if (distinct_messages) {
            key += '\0';
            key += s.last_message;
        }
        return key;
    };
    std::queue<GridState> frontier;
    std::unordered_set<std::string> seen;
    frontier.push(start);
    seen.insert(key_of(start));
    std::size_t expanded = 0;
    while (!frontier.empty() && expanded < max_expanded) {
        GridState s = std::move(frontier.front());
        frontier.pop();
        if (s.terminated) continue;
        ++expanded;
        for (Action a : kAllActions) {
            StepResult r = step(s, a);
            visit(s, a, r);
            if (seen.insert(key_of(r.next)).second) frontier.push(r.next);
        }
    }
}

SolveReport solve(const GridState& start, std::size_t max_expanded) {
    SolveReport report;
    struct Node {
        GridState state;
        int parent = -1;
        Action via = Action::GoNorth;
    };
    std::vector<Node> nodes;
    std::unordered_set<std::uint32_t> seen;
    std::queue<int> frontier;

    nodes.push_back({start, -1, Action::GoNorth});
    seen.insert(state_signature(start));
    frontier.push(0);

    while (!frontier.empty() && report.expanded < max_expanded) {
        int idx = frontier.front();
        frontier.pop();
        GridState s = nodes[static_cast<size_t>(idx)].state;
        if (s.terminated) {
            report.solvable = true;
            std::vector<Action> path;
            for (int i = idx; nodes[static_cast<size_t>(i)].parent >= 0;
                 i = nodes[static_cast<size_t>(i)].parent)
                path.push_back(nodes[static_cast<size_t>(i)].via);
            report.solution.assign(path.rbegin(), path.rend());
            return report;
        }
        ++report.expanded;
        for (Action a : kAllActions) {
            StepResult r = step(s, a);
            std::uint32_t sig = state_signature(r.next);
            if (!seen.insert(sig).second) continue;
            nodes.push_back({std::move(r.next), idx, a});
            frontier.push(static_cast<int>(nodes.size()) - 1);
        }
    }
    return report;
}

namespace {

std::optional<std::vector<Action>> walk_between(const GridState& state, Coord from, Coord target) {
    if (!state.layout) return std::nullopt;
    const GridLayout& layout = *state.layout;
    auto passable = [&](Coord c) {
        CellKind k = layout.at(c);
        if (k == CellKind::DoorClosed || k == CellKind::DoorOpen) return !state.door_locked;
        return k == CellKind::Floor || k == CellKind::StairsUp || k == CellKind::StairsDown;
    };
    if (from == target) return std::vector<Action>{};
    if (!passable(target)) return std::nullopt;

    struct Node {
        Coord pos;
        int parent;
        Action via;
    };
    std::vector<Node> nodes{{from, -1, Action::GoNorth}};
    std::unordered_set<int> seen{from.row * 256 + from.col};
    std::queue<int> frontier;
    frontier.push(0);
    const Action moves[4] = {Action::GoNorth, Action::GoEast, Action::GoSouth, Action::GoWest};
    const int dr[4] = {-1, 0, 1, 0};
    const int dc[4] = {0, 1, 0, -1};
    while (!frontier.empty()) {
        int idx = frontier.front();
        frontier.pop();
        Coord pos = nodes[static_cast<size_t>(idx)].pos;
        for (int m = 0; m < 4; ++m) {
            Coord nxt{pos.row + dr[m], pos.col + dc[m]};
            if (!passable(nxt)) continue;
            if (!seen.insert(nxt.row * 256 + nxt.col).second) continue;
            nodes.push_back({nxt, idx, moves[m]});
            if (nxt == target) {
                std::vector<Action> path;
                for (int i = static_cast<int>(nodes.size()) - 1;
                     nodes[static_cast<size_t>(i)].parent >= 0;
                     i = nodes[static_cast<size_t>(i)].parent)
                    path.push_back(nodes[static_cast<size_t>(i)].via);
                return std::vector<Action>(path.rbegin(), path.rend());
            }
            frontier.push(static_cast<int>(nodes.size()) - 1);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<Action>> shortest_walk(const GridState& state, Coord target) {
    return walk_between(state, state.agent_pos, target);
}

std::optional<int> walk_distance(const GridState& state, Coord from, Coord target) {
    auto path = walk_between(state, from, target);
    if (!path) return std::nullopt;
    return static_cast<int>(path->size());
}

std::optional<std::vector<Action>> scripted_key_door_prefix(const GridState& start) {
    if (!start.layout || !start.key_on_floor || !start.layout->door_pos) return std::nullopt;
    const GridLayout& layout = *start.layout;

    auto to_key = shortest_walk(start, *start.key_on_floor);
    if (!to_key) return std::nullopt;
    std::vector<Action> script = *to_key;
    script.push_back(Action::PickUp);

    GridState cur = start;
    for (Action a : script) cur = step(cur, a).next;

    // nearest walkable cell orthogonally adjacent to the door
    Coord door = *layout.door_pos;
    std::optional<std::vector<Action>> best;
    for (Coord adj : {Coord{door.row - 1, door.col}, Coord{door.row + 1, door.col},
                      Coord{door.row, door.col - 1}, Coord{door.row, door.col + 1}}) {
        if (!layout.walkable(adj) || layout.at(adj) == CellKind::DoorClosed) continue;
        auto path = shortest_walk(cur, adj);
        if (path && (!best || path->size() < best->size())) best = path;
    }
    if (!best) return std::nullopt;
    script.insert(script.end(), best->begin(), best->end());
    script.push_back(Action::Apply);
    return script;
}

}  // namespace keyroom
