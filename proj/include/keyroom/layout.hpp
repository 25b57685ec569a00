#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace keyroom {

struct Coord {
    int row = 0;
    int col = 0;

    bool operator==(const Coord&) const = default;
};

enum class CellKind : std::uint8_t {
    Floor,
    WallH,  // horizontal walls and corners, rendered '-'
    WallV,  // vertical walls, rendered '|'
    DoorClosed,
    DoorOpen,
    StairsUp,
    StairsDown,
    Void,
};

char cell_glyph(CellKind kind);
std::optional<CellKind> cell_from_glyph(char glyph);

// Static scene geometry. Door open/closed state lives in GridState; the cell
// grid stores the door's position as DoorClosed and never changes.
struct GridLayout {
    int width = 0;
    int height = 0;
    std::vector<CellKind> cells;  // row-major, width*height

    std::optional<Coord> door_pos;
    std::optional<Coord> key_spawn;
    std::optional<Coord> goal_pos;    // the StairsDown cell
    std::optional<Coord> agent_spawn;

    std::uint64_t seed = 0;

    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
    }
    CellKind at(Coord c) const {
        return in_bounds(c) ? cells[static_cast<size_t>(c.row) * width + c.col] : CellKind::Void;
    }
    void set(Coord c, CellKind k) { cells[static_cast<size_t>(c.row) * width + c.col] = k; }

    // A cell the agent may stand on (door passability is state-dependent and
    // checked by step()).
    bool walkable(Coord c) const {
        switch (at(c)) {
            case CellKind::Floor:
            case CellKind::DoorClosed:
            case CellKind::DoorOpen:
            case CellKind::StairsUp:
            case CellKind::StairsDown:
                return true;
            default:
                return false;
        }
    }

    // Glyph rows of the raw cell grid (no agent/key/door-state overlay).
    std::vector<std::string> cell_rows() const;

    bool operator==(const GridLayout&) const = default;
};

struct LayoutConfig {
    int agent_room_width = 5;   // interior cells of the room holding agent + key
    int goal_room_width = 5;    // interior cells of the room holding the goal
    int room_height = 5;        // shared interior height

    bool operator==(const LayoutConfig&) const = default;
};

// Procedural two-room key-door scene: agent room on the left, goal room on the
// right, one door in the shared wall. Key, agent, stairs-up and goal positions
// are sampled per seed; room sizes are fixed by the config.
GridLayout generate_layout(std::uint64_t seed, const LayoutConfig& config = {});

// Checks every GridLayout invariant (cell counts, side-of-door placement,
// flood-fill reachability). Throws std::runtime_error on violation.
void validate_layout(const GridLayout& layout);

std::uint64_t layout_fingerprint(const GridLayout& layout);

}  // namespace keyroom
