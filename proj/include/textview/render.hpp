#pragma once

#include <array>
#include <string>
#include <vector>

#include "keyroom/state.hpp"

namespace textview {

enum class ViewKind : std::uint8_t {
    Cropped,     // 9x9 agent-centered window
    GameScreen,  // 21x79 scene canvas plus message line and two status lines
};

std::string view_name(ViewKind v);

inline constexpr int kCropSize = 9;
inline constexpr int kScreenRows = 21;
inline constexpr int kScreenCols = 79;

inline constexpr const char* kStatusLine1 =
    "Agent the Footpad              St:14 Dx:17 Co:17 In:9 Wi:11 Ch:7 Chaotic S:0";
inline constexpr const char* kStatusLine2 = "Dlvl:1 $:0 HP:12(12) Pw:2(2) AC:7 Xp:1/0";

struct RenderOptions {
    // Scene bounding box placement on the 21x79 canvas. The scene is centered
    // and nudged one row down, matching NetHack's map framing.
    int vertical_bias = 1;
    std::string status_line1 = kStatusLine1;
    std::string status_line2 = kStatusLine2;
};

struct ObservationText {
    std::vector<std::string> lines;  // Cropped: 9 grid rows. GameScreen: message + 21 + 2 status.
    ViewKind view = ViewKind::Cropped;
    bool separator = true;
    std::string message;
    bool includes_stats = false;

    std::string joined() const;
};

// Total glyph map over cell kinds plus the agent; matches the prompt symset.
struct SymbolMap {
    static char glyph(keyroom::CellKind kind) { return keyroom::cell_glyph(kind); }
    static constexpr char kAgent = '@';
    static constexpr char kKey = '(';
    static constexpr char kVoid = ' ';
};

ObservationText render(const keyroom::GridState& state, ViewKind view, bool separator,
                       const RenderOptions& options = {});

// The <gameplay> body: "Time: 0" block, optional "Action: <name>" line, then
// the "Time: 1" block. Cropped blocks carry a "Current message:" line; game
// screens embed the message as the screen's first row.
std::string render_transition(const keyroom::Transition& t, ViewKind view, bool separator,
                              bool include_action, const RenderOptions& options = {});

}  // namespace textview
