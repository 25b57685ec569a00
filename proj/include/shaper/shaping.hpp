#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>

#include "annotators/backend.hpp"
#include "annotators/verdict_io.hpp"
#include "keyroom/state.hpp"

namespace shaper {

// phi(state): subgoals achieved so far; key held counts 1, door unlocked
// counts a second. Monotone along any trajectory (the key is kept and the
// door never re-locks), including through goal entry.
int progress_potential(const keyroom::GridState& state);

enum class ShapingMode : std::uint8_t {
    Additive,        // task + bonus when the termination signal fires
    PotentialBased,  // task + gamma*phi(after) - phi(before)
};

enum class ShapingSource : std::uint8_t {
    Oracle,          // beta from the transition's ground-truth event
    CachedVerdicts,  // beta from a verdicts.jsonl lookup by transition id
    LiveBackend,     // beta from an Annotator called on the fly
};

struct ShapingConfig {
    ShapingSource source = ShapingSource::Oracle;
    ShapingMode mode = ShapingMode::Additive;
    double subgoal_bonus = 1.0;
    double gamma = 0.99;
    bool once_per_episode = true;  // pay each subgoal bonus at most once per trajectory

    // CachedVerdicts: matched canonical flags per transition id.
    std::shared_ptr<const std::unordered_map<std::string, annotators::VerdictRecord>> verdicts;
    // LiveBackend: annotator plus the prompt configuration it sees.
    std::shared_ptr<annotators::Annotator> live;
    std::string live_config_name = "cropped-provided";
};

std::unordered_map<std::string, annotators::VerdictRecord> index_verdicts(
    const std::vector<annotators::VerdictRecord>& records);

struct ShapedReward {
    double reward = 0.0;
    bool beta_fired = false;
    bool unparseable_verdict = false;  // treated as beta = 0
};

// Eq.-style shaped reward for one transition. Additive pays the bonus when
// the source's matched canonical flags mark the transition's achieved subgoal
// true (Oracle: exactly event != None). Missing cached verdicts are errors
// naming the transition id; unparseable ones count as beta = 0.
ShapedReward shaped_reward(const keyroom::Transition& t, const ShapingConfig& config);

}  // namespace shaper
