#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "keyroom/state.hpp"
#include "textview/render.hpp"

namespace promptkit {

enum class SubgoalMode : std::uint8_t {
    Provided,  // the prompt lists the subgoal dictionary to verify
    Discover,  // the model is asked to break the task down itself
};

std::string subgoal_mode_name(SubgoalMode m);

// One (glyph, wiki-style description) entry of the symset section.
using SymsetEntry = std::pair<char, std::string>;

std::vector<SymsetEntry> default_symset();
std::vector<std::string> default_provided_subgoals();

struct PromptSpec {
    std::string name;  // config name, e.g. "gamescreen-provided"
    std::optional<std::string> role_text;
    std::string env_description = "The environment is MiniHack.";
    std::vector<SymsetEntry> symset = default_symset();
    std::string task_description = "The task of the agent is to win the game.";
    SubgoalMode subgoal_mode = SubgoalMode::Provided;
    std::vector<std::string> provided_subgoals = default_provided_subgoals();
    textview::ViewKind view = textview::ViewKind::Cropped;
    bool separator = true;
    bool include_action = false;
    std::string output_format_request =
        "Report your response in a dictionary containing the name of the subgoals as keys and "
        "booleans as value. For example:";
    bool headline_config = false;  // one of the four headline configurations

    textview::RenderOptions render_options;
};

struct PromptText {
    std::string text;
    PromptSpec spec;
    std::string transition_id;
    std::string prompt_id;  // stable hash of the text
};

// Renders the full single-turn prompt: role (if any), environment description,
// symset bullets, task, subgoal section, instructions, output-format request,
// and the <gameplay> transition block, in that order.
PromptText compose(const PromptSpec& spec, const keyroom::Transition& t);

// All 16 named configurations: {cropped,gamescreen} x {provided,discovered}
// x {separator,nosep} x {noaction,action}. The four headline configurations
// carry headline_config = true.
std::vector<PromptSpec> config_matrix();

// Looks a config up by name in config_matrix().
std::optional<PromptSpec> config_by_name(const std::string& name);

}  // namespace promptkit
