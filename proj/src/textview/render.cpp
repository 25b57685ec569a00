#include "textview/render.hpp"

#include <stdexcept>

namespace textview {

using keyroom::CellKind;
using keyroom::Coord;
using keyroom::GridState;

std::string view_name(ViewKind v) {
    return v == ViewKind::Cropped ? "cropped" : "gamescreen";
}

std::string ObservationText::joined() const {
    std::string out;
    for (size_t i = 0; i < lines.size(); ++i) {
        out += lines[i];
        if (i + 1 < lines.size()) out += '\n';
    }
    return out;
}

namespace {

// Glyph of one map cell with the dynamic overlays applied: door state, key on
// the floor, agent on top.
char scene_glyph(const GridState& state, Coord c) {
    if (state.agent_pos == c) return SymbolMap::kAgent;
    if (state.key_on_floor && *state.key_on_floor == c) return SymbolMap::kKey;
    const keyroom::GridLayout& layout = *state.layout;
    CellKind kind = layout.at(c);
    if (kind == CellKind::DoorClosed || kind == CellKind::DoorOpen)
        return state.door_locked ? '+' : '|';
    return SymbolMap::glyph(kind);
}

std::string expand_row(const std::vector<char>& glyphs, bool separator) {
    std::string out;
    if (!separator) {
        out.assign(glyphs.begin(), glyphs.end());
        return out;
    }
    out.reserve(glyphs.size() * 2);
    for (size_t i = 0; i < glyphs.size(); ++i) {
        out += glyphs[i];
        if (i + 1 < glyphs.size()) out += ' ';
    }
    return out;
}

std::vector<std::string> render_cropped(const GridState& state, bool separator) {
    std::vector<std::string> rows;
    rows.reserve(kCropSize);
    const int half = kCropSize / 2;
    for (int dr = -half; dr <= half; ++dr) {
        std::vector<char> glyphs;
        glyphs.reserve(kCropSize);
        for (int dc = -half; dc <= half; ++dc) {
            Coord c{state.agent_pos.row + dr, state.agent_pos.col + dc};
            glyphs.push_back(state.layout->in_bounds(c) ? scene_glyph(state, c) : SymbolMap::kVoid);
        }
        rows.push_back(expand_row(glyphs, separator));
    }
    return rows;
}

std::vector<std::string> render_gamescreen(const GridState& state, bool separator,
                                           const RenderOptions& options) {
    const keyroom::GridLayout& layout = *state.layout;
    if (layout.height > kScreenRows || layout.width > kScreenCols)
        throw std::runtime_error("render: scene does not fit the 21x79 canvas");

    const int top = (kScreenRows - layout.height) / 2 + options.vertical_bias;
    const int left = (kScreenCols - layout.width) / 2;

    std::vector<std::string> lines;
    lines.reserve(1 + kScreenRows + 2);
    lines.push_back(state.last_message);
    for (int r = 0; r < kScreenRows; ++r) {
        std::vector<char> glyphs(kScreenCols, SymbolMap::kVoid);
        int scene_row = r - top;
        if (scene_row >= 0 && scene_row < layout.height) {
            for (int c = 0; c < layout.width; ++c)
                glyphs[static_cast<size_t>(left + c)] = scene_glyph(state, {scene_row, c});
        }
        lines.push_back(expand_row(glyphs, separator));
    }
    lines.push_back(options.status_line1);
    lines.push_back(options.status_line2);
    return lines;
}

}  // namespace

ObservationText render(const GridState& state, ViewKind view, bool separator,
                       const RenderOptions& options) {
    if (!state.layout) throw std::runtime_error("render: state has no layout");
    ObservationText obs;
    obs.view = view;
    obs.separator = separator;
    obs.message = state.last_message;
    obs.includes_stats = view == ViewKind::GameScreen;
    obs.lines = view == ViewKind::Cropped ? render_cropped(state, separator)
                                          : render_gamescreen(state, separator, options);
    return obs;
}

std::string render_transition(const keyroom::Transition& t, ViewKind view, bool separator,
                              bool include_action, const RenderOptions& options) {
    auto block = [&](const GridState& state, int time) {
        ObservationText obs = render(state, view, separator, options);
        std::string out = "Time: " + std::to_string(time) + "\n";
        if (view == ViewKind::Cropped) {
            out += "Current message: " + obs.message + "\n";
        }
        out += "\n";
        out += obs.joined();
        return out;
    };
    std::string out = block(t.before, 0);
    out += "\n";
    if (include_action) out += "Action: " + keyroom::action_name(t.action) + "\n";
    out += block(t.after, 1);
    return out;
}

}  // namespace textview
