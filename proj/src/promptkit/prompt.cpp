#include "promptkit/prompt.hpp"

#include <stdexcept>

#include "support/hash.hpp"

namespace promptkit {

std::string subgoal_mode_name(SubgoalMode m) {
    return m == SubgoalMode::Provided ? "provided" : "discovered";
}

std::vector<SymsetEntry> default_symset() {
    return {
        {'.', "represents a floor tile."},
        {'|', "can represent either a wall, a vertical wall, an open door."},
        {'-',
         "can represent either the bottom left corner (of a room), bottom right corner (of a "
         "room), wall, horizontal wall, wall, top left corner (of a room), op right corner (of a "
         "room)."},
        {'+', "represents a closed door. Doors can be locked, and require a key to open."},
        {'(', "represents a useful item (pick-axe, key, lamp...)"},
        {'<', "represents a ladder or staircase up."},
        {'>', "represents a ladder or staircase down."},
    };
}

std::vector<std::string> default_provided_subgoals() {
    return {keyroom::kPickupSubgoal, keyroom::kUnlockSubgoal};
}

PromptText compose(const PromptSpec& spec, const keyroom::Transition& t) {
    if (spec.subgoal_mode == SubgoalMode::Provided && spec.provided_subgoals.empty())
        throw std::runtime_error("compose: Provided mode requires at least one subgoal");
    // the symset must explain every glyph the renderer can emit ('@' and the
    // void space excepted)
    for (char glyph : {'.', '|', '-', '+', '(', '<', '>'}) {
        bool covered = false;
        for (const auto& [g, description] : spec.symset) covered = covered || g == glyph;
        if (!covered)
            throw std::runtime_error(std::string("compose: symset lacks an entry for '") + glyph +
                                     "'");
    }

    std::string out;
    if (spec.role_text && !spec.role_text->empty()) {
        out += *spec.role_text;
        out += "\n\n";
    }
    out += spec.env_description;
    out += "\n\n";
    out +=
        "I will present you with a short extract of a gameplay. At each timestep, symbols "
        "represent the following items:\n";
    for (const auto& [glyph, description] : spec.symset) {
        out += "- \"";
        out += glyph;
        out += "\" ";
        out += description;
        out += "\n";
    }
    out += "\n";
    out += spec.task_description;
    out += "\n\n";

    if (spec.subgoal_mode == SubgoalMode::Provided) {
        out += "Consider the following subgoals:\n```python\nsubgoals = {\n";
        for (const auto& name : spec.provided_subgoals) {
            out += "    \"" + name + "\": None,\n";
        }
        out += "}\n```\n";
    } else {
        out += "First, based on your knowledge of NetHack, break down the task of the agent into "
               "subgoals.\n";
    }
    out += "Then, consider the following game transition, which might or might not contain these "
           "subgoals.\n";
    out += "Determine if any of the subgoals is achieved at Time: 1 or not.\n";
    out += "\n\n";
    out += spec.output_format_request;
    out += "\n```python\n{\n    <name of goal>: <bool>,\n}\n";
    out += "\n";
    out += "Observation Sequence:\n";
    out += "\n";
    out += "<gameplay>\n";
    out += textview::render_transition(t, spec.view, spec.separator, spec.include_action,
                                       spec.render_options);
    out += "\n\n</gameplay>\n";
    out += "\n";
    out += "I will not consider anything that is not in the dictionary.\n";
    out += "You have only one shot at this, and you cannot ask for clarifications.\n";

    PromptText prompt;
    prompt.text = std::move(out);
    prompt.spec = spec;
    prompt.transition_id = t.id;
    prompt.prompt_id = support::fnv1a64_hex(prompt.text);
    return prompt;
}

std::vector<PromptSpec> config_matrix() {
    std::vector<PromptSpec> specs;
    for (textview::ViewKind view : {textview::ViewKind::GameScreen, textview::ViewKind::Cropped}) {
        for (SubgoalMode mode : {SubgoalMode::Provided, SubgoalMode::Discover}) {
            for (bool separator : {true, false}) {
                for (bool include_action : {false, true}) {
                    PromptSpec spec;
                    spec.view = view;
                    spec.subgoal_mode = mode;
                    spec.separator = separator;
                    spec.include_action = include_action;
                    spec.headline_config = separator && !include_action;
                    spec.name = textview::view_name(view) + "-" + subgoal_mode_name(mode);
                    if (!separator) spec.name += "-nosep";
                    if (include_action) spec.name += "-action";
                    specs.push_back(std::move(spec));
                }
            }
        }
    }
    return specs;
}

std::optional<PromptSpec> config_by_name(const std::string& name) {
    for (auto& spec : config_matrix())
        if (spec.name == name) return spec;
    return std::nullopt;
}

}  // namespace promptkit
