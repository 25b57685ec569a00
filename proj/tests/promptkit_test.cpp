#include <doctest.h>

#include <filesystem>
#include <set>

#include "datasets/manifest.hpp"
#include "promptkit/prompt.hpp"
#include "support/files.hpp"
#include "support/scene_text.hpp"
#include "support/strings.hpp"

using namespace promptkit;

namespace {

std::string golden(const std::string& name) {
    return support::read_file(std::filesystem::path(TEST_DATA_DIR) / "golden" / name);
}

PromptSpec spec_for(textview::ViewKind view, SubgoalMode mode, bool separator = true,
                    bool action = false) {
    PromptSpec spec;
    spec.view = view;
    spec.subgoal_mode = mode;
    spec.separator = separator;
    spec.include_action = action;
    return spec;
}

}  // namespace

TEST_CASE("golden: cropped discovery prompt") {
    auto t = testsupport::approach_stairs_transition();
    PromptText p = compose(spec_for(textview::ViewKind::Cropped, SubgoalMode::Discover), t);
    CHECK(support::equal_mod_trailing_ws(p.text, golden("prompt_cropped_discovered.golden")));
}

TEST_CASE("golden: gamescreen discovery prompt") {
    auto t = testsupport::approach_stairs_transition();
    PromptText p = compose(spec_for(textview::ViewKind::GameScreen, SubgoalMode::Discover), t);
    CHECK(support::equal_mod_trailing_ws(p.text, golden("prompt_gamescreen_discovered.golden")));
}

TEST_CASE("golden: cropped provided prompt") {
    auto t = testsupport::approach_stairs_transition();
    PromptText p = compose(spec_for(textview::ViewKind::Cropped, SubgoalMode::Provided), t);
    CHECK(support::equal_mod_trailing_ws(p.text, golden("prompt_cropped_provided.golden")));
}

TEST_CASE("golden: no-separator variant") {
    auto t = testsupport::approach_stairs_transition();
    PromptText p = compose(spec_for(textview::ViewKind::Cropped, SubgoalMode::Discover, false), t);
    CHECK(support::equal_mod_trailing_ws(p.text, golden("prompt_cropped_discovered_nosep.golden")));
}

TEST_CASE("golden: key pickup and door unlock scenes") {
    PromptText pickup = compose(spec_for(textview::ViewKind::Cropped, SubgoalMode::Discover),
                                testsupport::pickup_transition());
    CHECK(support::equal_mod_trailing_ws(pickup.text, golden("prompt_pickup_discovered.golden")));

    PromptText unlock = compose(spec_for(textview::ViewKind::Cropped, SubgoalMode::Discover),
                                testsupport::unlock_transition());
    CHECK(support::equal_mod_trailing_ws(unlock.text, golden("prompt_unlock_discovered.golden")));
}

TEST_CASE("prompt carries the required markers") {
    auto t = testsupport::approach_stairs_transition();
    for (const PromptSpec& spec : config_matrix()) {
        PromptText p = compose(spec, t);
        CHECK(support::contains(p.text, "<gameplay>"));
        CHECK(support::contains(p.text, "</gameplay>"));
        CHECK(support::contains(p.text, "Time: 0"));
        CHECK(support::contains(p.text, "Time: 1"));
        CHECK(support::contains(p.text, "You have only one shot at this"));
    }
}

TEST_CASE("provided mode lists the literal subgoal dictionary") {
    auto t = testsupport::approach_stairs_transition();
    PromptText p = compose(spec_for(textview::ViewKind::Cropped, SubgoalMode::Provided), t);
    CHECK(support::contains(p.text, "subgoals = {"));
    CHECK(support::contains(p.text, "\"pick up the key\": None,"));
    CHECK(support::contains(p.text, "\"open the door\": None,"));
    CHECK_FALSE(support::contains(p.text, "break down the task"));
}

TEST_CASE("discover mode asks for the breakdown instead") {
    auto t = testsupport::approach_stairs_transition();
    PromptText p = compose(spec_for(textview::ViewKind::Cropped, SubgoalMode::Discover), t);
    CHECK(support::contains(p.text, "break down the task of the agent into subgoals"));
    CHECK_FALSE(support::contains(p.text, "subgoals = {"));
}

TEST_CASE("compose rejects an empty provided list") {
    auto t = testsupport::approach_stairs_transition();
    PromptSpec spec = spec_for(textview::ViewKind::Cropped, SubgoalMode::Provided);
    spec.provided_subgoals.clear();
    CHECK_THROWS(compose(spec, t));
}

TEST_CASE("composition is deterministic") {
    auto t = testsupport::approach_stairs_transition();
    PromptSpec spec = spec_for(textview::ViewKind::GameScreen, SubgoalMode::Provided);
    CHECK(compose(spec, t).text == compose(spec, t).text);
    CHECK(compose(spec, t).prompt_id == compose(spec, t).prompt_id);
}

TEST_CASE("config matrix has 16 entries, 4 headline configs, unique names") {
    auto specs = config_matrix();
    CHECK(specs.size() == 16);
    int main_count = 0;
    std::set<std::string> names;
    auto t = testsupport::approach_stairs_transition();
    for (const auto& spec : specs) {
        main_count += spec.headline_config;
        names.insert(spec.name);
        CHECK_NOTHROW(compose(spec, t));
    }
    CHECK(main_count == 4);
    CHECK(names.size() == 16);
    CHECK(config_by_name("gamescreen-provided").has_value());
    CHECK(config_by_name("cropped-discovered-nosep-action").has_value());
    CHECK_FALSE(config_by_name("nonsense").has_value());
}

TEST_CASE("distinct transitions give distinct prompts") {
    auto a = testsupport::approach_stairs_transition();
    auto b = testsupport::pickup_transition();
    PromptSpec spec = spec_for(textview::ViewKind::Cropped, SubgoalMode::Provided);
    CHECK(compose(spec, a).text != compose(spec, b).text);
    CHECK(compose(spec, a).prompt_id != compose(spec, b).prompt_id);
}

TEST_CASE("role text goes first when set") {
    auto t = testsupport::approach_stairs_transition();
    PromptSpec spec = spec_for(textview::ViewKind::Cropped, SubgoalMode::Provided);
    spec.role_text = "You are an expert NetHack player.";
    PromptText p = compose(spec, t);
    CHECK(p.text.rfind("You are an expert NetHack player.\n\nThe environment is MiniHack.", 0) == 0);
}

TEST_CASE("compose rejects a symset that misses renderer glyphs") {
    auto t = testsupport::approach_stairs_transition();
    PromptSpec spec = spec_for(textview::ViewKind::Cropped, SubgoalMode::Provided);
    spec.symset.erase(spec.symset.begin());  // drop the '.' entry
    CHECK_THROWS(compose(spec, t));
}

TEST_CASE("prompts are injective over a collected batch") {
    datasets::DatasetManifest manifest = datasets::collect_balanced(23, 30);
    PromptSpec spec = spec_for(textview::ViewKind::Cropped, SubgoalMode::Provided);
    std::set<std::string> texts, ids;
    for (const auto& t : manifest.transitions) {
        PromptText p = compose(spec, t);
        texts.insert(p.text);
        ids.insert(p.prompt_id);
    }
    CHECK(texts.size() == manifest.transitions.size());
    CHECK(ids.size() == manifest.transitions.size());
}
