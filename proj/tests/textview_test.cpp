#include <doctest.h>

#include "keyroom/search.hpp"
#include "support/scene_text.hpp"
#include "support/strings.hpp"
#include "textview/render.hpp"

using namespace textview;
using keyroom::GridState;

namespace {

GridState fresh_state(std::uint64_t seed) {
    return keyroom::initial_state(
        std::make_shared<const keyroom::GridLayout>(keyroom::generate_layout(seed)));
}

}  // namespace

TEST_CASE("cropped rows are 9 cells, 17 chars with the separator") {
    GridState s = fresh_state(0);
    ObservationText sep = render(s, ViewKind::Cropped, true);
    REQUIRE(sep.lines.size() == 9);
    for (const auto& line : sep.lines) CHECK(line.size() == 17);

    ObservationText bare = render(s, ViewKind::Cropped, false);
    REQUIRE(bare.lines.size() == 9);
    for (const auto& line : bare.lines) CHECK(line.size() == 9);
}

TEST_CASE("no-separator rows are the separator rows with inter-cell spaces removed") {
    GridState s = fresh_state(1);
    for (ViewKind view : {ViewKind::Cropped, ViewKind::GameScreen}) {
        ObservationText sep = render(s, view, true);
        ObservationText bare = render(s, view, false);
        auto sep_cells = testsupport::cells_from_observation(sep);
        auto bare_cells = testsupport::cells_from_observation(bare);
        CHECK(sep_cells == bare_cells);
    }
}

TEST_CASE("agent is the crop center for every reachable state") {
    GridState start = fresh_state(2);
    keyroom::for_each_reachable_edge(
        start, 2000, [](const GridState&, keyroom::Action, const keyroom::StepResult& r) {
            if (r.next.terminated) return;
            ObservationText obs = render(r.next, ViewKind::Cropped, false);
            int agent_count = 0;
            for (const auto& line : obs.lines)
                for (char c : line) agent_count += c == '@';
            CHECK(agent_count == 1);
            CHECK(obs.lines[4][4] == '@');  // row 5, column 5 in 1-based cells
        });
}

TEST_CASE("parse-back recovers agent, key presence and door glyph from the crop") {
    GridState start = fresh_state(3);
    keyroom::Coord door = *start.layout->door_pos;
    keyroom::for_each_reachable_edge(
        start, 2000, [&](const GridState&, keyroom::Action, const keyroom::StepResult& r) {
            const GridState& s = r.next;
            if (s.terminated) return;
            auto cells = testsupport::cells_from_observation(render(s, ViewKind::Cropped, true));
            CHECK(cells[4][4] == '@');

            bool key_expected = false;
            if (s.key_on_floor) {
                int dr = s.key_on_floor->row - s.agent_pos.row;
                int dc = s.key_on_floor->col - s.agent_pos.col;
                // visible unless outside the window or under the agent
                key_expected = dr >= -4 && dr <= 4 && dc >= -4 && dc <= 4 && !(dr == 0 && dc == 0);
            }
            bool key_seen = false;
            for (const auto& row : cells)
                for (char c : row) key_seen = key_seen || c == '(';
            CHECK(key_seen == key_expected);

            int dr = door.row - s.agent_pos.row;
            int dc = door.col - s.agent_pos.col;
            if (dr >= -4 && dr <= 4 && dc >= -4 && dc <= 4 && !(dr == 0 && dc == 0)) {
                char glyph = cells[static_cast<size_t>(dr + 4)][static_cast<size_t>(dc + 4)];
                CHECK(glyph == (s.door_locked ? '+' : '|'));
            }
        });
}

TEST_CASE("gamescreen is 24 lines: message, 21 rows, two fixed status lines") {
    GridState s = fresh_state(4);
    ObservationText obs = render(s, ViewKind::GameScreen, true);
    REQUIRE(obs.lines.size() == 24);
    CHECK(obs.lines[0] == s.last_message);
    CHECK(obs.lines[22] == kStatusLine1);
    CHECK(obs.lines[23] == kStatusLine2);
    CHECK(obs.includes_stats);
    for (size_t i = 1; i <= 21; ++i) CHECK(obs.lines[i].size() == 2 * 79 - 1);

    // status lines stay constant across steps
    GridState next = keyroom::step(s, keyroom::Action::GoNorth).next;
    ObservationText obs2 = render(next, ViewKind::GameScreen, true);
    CHECK(obs2.lines[22] == obs.lines[22]);
    CHECK(obs2.lines[23] == obs.lines[23]);
}

TEST_CASE("pickup shows its message above the gamescreen grid") {
    keyroom::Transition t = testsupport::pickup_transition();
    ObservationText obs = render(t.after, ViewKind::GameScreen, true);
    CHECK(obs.lines[0] == keyroom::kPickupMessage);
}

TEST_CASE("key glyph is shown exactly while the key lies on the floor") {
    GridState s = fresh_state(5);
    auto path = keyroom::shortest_walk(s, *s.layout->key_spawn);
    REQUIRE(path.has_value());
    for (keyroom::Action a : *path) s = keyroom::step(s, a).next;

    auto count_keys = [](const ObservationText& obs) {
        int n = 0;
        for (const auto& row : testsupport::cells_from_observation(obs))
            for (char c : row) n += c == '(';
        return n;
    };
    CHECK(count_keys(render(fresh_state(5), ViewKind::GameScreen, true)) == 1);
    // standing on the key hides it under '@'
    CHECK(count_keys(render(s, ViewKind::GameScreen, true)) == 0);
    GridState held = keyroom::step(s, keyroom::Action::PickUp).next;
    CHECK(count_keys(render(held, ViewKind::GameScreen, true)) == 0);
    GridState away = keyroom::step(held, keyroom::Action::GoNorth).next;
    if (away.agent_pos == held.agent_pos) away = keyroom::step(held, keyroom::Action::GoSouth).next;
    CHECK(count_keys(render(away, ViewKind::GameScreen, true)) == 0);
}

TEST_CASE("door renders '+' while locked and '|' once opened") {
    keyroom::Transition t = testsupport::unlock_transition();
    auto before = testsupport::cells_from_observation(render(t.before, ViewKind::Cropped, true));
    auto after = testsupport::cells_from_observation(render(t.after, ViewKind::Cropped, true));
    // the door sits one row up, one col left of the agent in this scene
    CHECK(before[3][3] == '+');
    CHECK(after[3][3] == '|');
}

TEST_CASE("agent next to the locked door renders contiguous glyphs without separator") {
    keyroom::Transition t = testsupport::unlock_transition();
    GridState s = t.before;
    // move the agent directly right of the door: door (3,2), stand at (3,3)
    s.agent_pos = {3, 3};
    ObservationText obs = render(s, ViewKind::Cropped, false);
    bool contiguous = false;
    for (const auto& line : obs.lines)
        contiguous = contiguous || support::contains(line, "+@") || support::contains(line, "@+");
    CHECK(contiguous);
}

TEST_CASE("rendering is deterministic") {
    GridState s = fresh_state(6);
    CHECK(render(s, ViewKind::GameScreen, true).joined() ==
          render(s, ViewKind::GameScreen, true).joined());
    CHECK(render(s, ViewKind::Cropped, false).joined() ==
          render(s, ViewKind::Cropped, false).joined());
}

TEST_CASE("render_transition carries two Time markers and the optional action line") {
    keyroom::Transition t = testsupport::approach_stairs_transition();
    std::string text = render_transition(t, ViewKind::Cropped, true, false);
    size_t first = text.find("Time: 0");
    size_t second = text.find("Time: 1");
    CHECK(first != std::string::npos);
    CHECK(second != std::string::npos);
    CHECK(text.find("Time:", first + 1) == second);
    CHECK(text.find("Action:") == std::string::npos);

    std::string with_action = render_transition(t, ViewKind::Cropped, true, true);
    CHECK(support::contains(with_action, "Action: go north"));

    keyroom::Transition pickup = testsupport::pickup_transition();
    CHECK(support::contains(render_transition(pickup, ViewKind::Cropped, true, true),
                            "Action: pickup"));

    // the gamescreen text strictly contains more cells than the crop
    CHECK(render_transition(t, ViewKind::GameScreen, true, false).size() > text.size());
}
