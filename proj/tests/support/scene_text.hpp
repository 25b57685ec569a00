#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "keyroom/state.hpp"
#include "textview/render.hpp"

namespace testsupport {

// Builds a layout (plus agent/key positions) from glyph rows. '@' marks the
// agent, '(' the key; both stand on floor. Rows may have ragged widths; short
// rows are padded with void.
struct TextScene {
    std::shared_ptr<const keyroom::GridLayout> layout;
    std::optional<keyroom::Coord> agent;
    std::optional<keyroom::Coord> key;
};

TextScene parse_scene(const std::vector<std::string>& rows);

// Decodes observation lines back into a plain glyph grid (separator removed);
// the renderer-inverse used by parse-back tests.
std::vector<std::string> cells_from_observation(const textview::ObservationText& obs);

// The three scenes behind the prompt golden files, wired as real transitions.

// Agent one step below a small upper room, moving north (no subgoal).
keyroom::Transition approach_stairs_transition();

// Agent standing on the key, picking it up.
keyroom::Transition pickup_transition();

// Agent next to the locked door with the key, applying it. The after state
// carries a second layout with the goal room revealed, as the scene shows.
keyroom::Transition unlock_transition();

}  // namespace testsupport
