#include "keyroom/layout.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "support/hash.hpp"
#include "support/rng.hpp"

namespace keyroom {

char cell_glyph(CellKind kind) {
    switch (kind) {
        case CellKind::Floor: return '.';
        case CellKind::WallH: return '-';
        case CellKind::WallV: return '|';
        case CellKind::DoorClosed: return '+';
        case CellKind::DoorOpen: return '|';
        case CellKind::StairsUp: return '<';
        case CellKind::StairsDown: return '>';
        case CellKind::Void: return ' ';
    }
    return '?';
}

std::optional<CellKind> cell_from_glyph(char glyph) {
    switch (glyph) {
        case '.': return CellKind::Floor;
        case '-': return CellKind::WallH;
        case '|': return CellKind::WallV;
        case '+': return CellKind::DoorClosed;
        case '<': return CellKind::StairsUp;
        case '>': return CellKind::StairsDown;
        case ' ': return CellKind::Void;
        default: return std::nullopt;
    }
}

std::vector<std::string> GridLayout::cell_rows() const {
    std::vector<std::string> rows;
    rows.reserve(static_cast<size_t>(height));
    for (int r = 0; r < height; ++r) {
        std::string row(static_cast<size_t>(width), ' ');
        for (int c = 0; c < width; ++c) row[static_cast<size_t>(c)] = cell_glyph(at({r, c}));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::vector<Coord> floor_cells_in(const GridLayout& layout, int r0, int r1, int c0, int c1) {
    std::vector<Coord> out;
    for (int r = r0; r <= r1; ++r)
        for (int c = c0; c <= c1; ++c)
            if (layout.at({r, c}) == CellKind::Floor) out.push_back({r, c});
    return out;
}

Coord take_cell(std::vector<Coord>& pool, support::SplitMix64& rng) {
    if (pool.empty()) throw std::runtime_error("layout generation: cell pool exhausted");
    size_t i = static_cast<size_t>(rng.next_below(pool.size()));
    Coord c = pool[i];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    return c;
}

}  // namespace

GridLayout generate_layout(std::uint64_t seed, const LayoutConfig& config) {
    if (config.agent_room_width < 2 || config.goal_room_width < 2 || config.room_height < 2)
        throw std::runtime_error("layout config: room dimensions must be at least 2x2");

    const int width = config.agent_room_width + config.goal_room_width + 3;
    const int height = config.room_height + 2;
    // The gamescreen canvas is 21x79; a scene that cannot fit is a config error.
    if (width > 79 || height > 21)
        throw std::runtime_error("layout config: rooms do not fit the 21x79 scene canvas");

    GridLayout layout;
    layout.width = width;
    layout.height = height;
    layout.seed = seed;
    layout.cells.assign(static_cast<size_t>(width) * height, CellKind::Floor);

    const int shared_col = config.agent_room_width + 1;
    for (int c = 0; c < width; ++c) {
        layout.set({0, c}, CellKind::WallH);
        layout.set({height - 1, c}, CellKind::WallH);
    }
    for (int r = 1; r < height - 1; ++r) {
        layout.set({r, 0}, CellKind::WallV);
        layout.set({r, width - 1}, CellKind::WallV);
        layout.set({r, shared_col}, CellKind::WallV);
    }

    support::SplitMix64 rng(support::derive_seed(seed, 0x6c61796f7574ull));

    const int door_row = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(height - 2)));
    layout.door_pos = Coord{door_row, shared_col};
    layout.set(*layout.door_pos, CellKind::DoorClosed);

    auto agent_side = floor_cells_in(layout, 1, height - 2, 1, shared_col - 1);
    auto goal_side = floor_cells_in(layout, 1, height - 2, shared_col + 1, width - 2);

    support::SplitMix64 cell_rng(support::derive_seed(seed, 0x63656c6c73ull));
    Coord stairs_up = take_cell(agent_side, cell_rng);
    layout.set(stairs_up, CellKind::StairsUp);
    layout.agent_spawn = take_cell(agent_side, cell_rng);
    layout.key_spawn = take_cell(agent_side, cell_rng);
    layout.goal_pos = take_cell(goal_side, cell_rng);
    layout.set(*layout.goal_pos, CellKind::StairsDown);

    validate_layout(layout);
    return layout;
}

void validate_layout(const GridLayout& layout) {
    if (layout.width <= 0 || layout.height <= 0 ||
        layout.cells.size() != static_cast<size_t>(layout.width) * layout.height)
        throw std::runtime_error("layout: inconsistent dimensions");
    if (!layout.door_pos || !layout.key_spawn || !layout.goal_pos || !layout.agent_spawn)
        throw std::runtime_error("layout: missing door/key/goal/agent placement");

    int doors = 0, ups = 0, downs = 0;
    for (int r = 0; r < layout.height; ++r) {
        for (int c = 0; c < layout.width; ++c) {
            switch (layout.at({r, c})) {
                case CellKind::DoorClosed:
                case CellKind::DoorOpen: ++doors; break;
                case CellKind::StairsUp: ++ups; break;
                case CellKind::StairsDown: ++downs; break;
                default: break;
            }
        }
    }
    if (doors != 1) throw std::runtime_error("layout: expected exactly one door cell");
    if (ups != 1) throw std::runtime_error("layout: expected exactly one stairs-up cell");
    if (downs != 1) throw std::runtime_error("layout: expected exactly one stairs-down cell");

    CellKind door_cell = layout.at(*layout.door_pos);
    if (door_cell != CellKind::DoorClosed && door_cell != CellKind::DoorOpen)
        throw std::runtime_error("layout: door_pos does not point at the door cell");
    if (layout.at(*layout.goal_pos) != CellKind::StairsDown)
        throw std::runtime_error("layout: goal_pos does not point at the stairs-down cell");
    if (layout.at(*layout.key_spawn) != CellKind::Floor)
        throw std::runtime_error("layout: key_spawn must be a floor cell");
    if (layout.at(*layout.agent_spawn) != CellKind::Floor)
        throw std::runtime_error("layout: agent_spawn must be a floor cell");

    // Flood fill with the door treated as open: every walkable cell must be
    // reachable from agent_spawn, and the goal must be on the far side of the
    // door (unreachable while it stays shut).
    auto flood = [&](bool door_open) {
        std::vector<char> seen(layout.cells.size(), 0);
        std::queue<Coord> q;
        auto push = [&](Coord c) {
            if (!layout.in_bounds(c)) return;
            size_t i = static_cast<size_t>(c.row) * layout.width + c.col;
            if (seen[i]) return;
            CellKind k = layout.at(c);
            bool pass = k == CellKind::Floor || k == CellKind::StairsUp || k == CellKind::StairsDown ||
                        ((k == CellKind::DoorClosed || k == CellKind::DoorOpen) && door_open);
            if (!pass) return;
            seen[i] = 1;
            q.push(c);
        };
        push(*layout.agent_spawn);
        while (!q.empty()) {
            Coord c = q.front();
            q.pop();
            push({c.row - 1, c.col});
            push({c.row + 1, c.col});
            push({c.row, c.col - 1});
            push({c.row, c.col + 1});
        }
        return seen;
    };

    auto seen_open = flood(true);
    for (int r = 0; r < layout.height; ++r) {
        for (int c = 0; c < layout.width; ++c) {
            if (!layout.walkable({r, c})) continue;
            if (!seen_open[static_cast<size_t>(r) * layout.width + c])
                throw std::runtime_error("layout: walkable cell unreachable with the door open");
        }
    }
    auto seen_shut = flood(false);
    auto at_idx = [&](Coord c) { return static_cast<size_t>(c.row) * layout.width + c.col; };
    if (!seen_shut[at_idx(*layout.key_spawn)])
        throw std::runtime_error("layout: key_spawn is not on the agent's side of the door");
    if (seen_shut[at_idx(*layout.goal_pos)])
        throw std::runtime_error("layout: goal_pos must lie behind the door");
}

std::uint64_t layout_fingerprint(const GridLayout& layout) {
    support::Fnv1a64 h;
    h.update_i32(layout.width).update_i32(layout.height);
    for (CellKind k : layout.cells) h.update_u64(static_cast<std::uint64_t>(k));
    auto upd = [&](const std::optional<Coord>& c) {
        h.update_i32(c ? c->row : -1).update_i32(c ? c->col : -1);
    };
    upd(layout.door_pos);
    upd(layout.key_spawn);
    upd(layout.goal_pos);
    upd(layout.agent_spawn);
    return h.value();
}

}  // namespace keyroom
