#include "shaper/shaping.hpp"

#include <stdexcept>

#include "promptkit/prompt.hpp"

namespace shaper {

using keyroom::SubgoalEvent;
using keyroom::Transition;

int progress_potential(const keyroom::GridState& state) {
    return (state.key_held ? 1 : 0) + (state.door_locked ? 0 : 1);
}

std::unordered_map<std::string, annotators::VerdictRecord> index_verdicts(
    const std::vector<annotators::VerdictRecord>& records) {
    std::unordered_map<std::string, annotators::VerdictRecord> index;
    for (const auto& record : records) index[record.transition_id] = record;
    return index;
}

namespace {

// beta fires iff the source marks the transition's achieved subgoal true.
ShapedReward termination_signal(const Transition& t, const ShapingConfig& config) {
    ShapedReward out;
    if (t.event == SubgoalEvent::None) return out;

    switch (config.source) {
        case ShapingSource::Oracle:
            out.beta_fired = true;
            return out;
        case ShapingSource::CachedVerdicts: {
            if (!config.verdicts)
                throw std::runtime_error("shaping: CachedVerdicts source without a verdict index");
            auto it = config.verdicts->find(t.id);
            if (it == config.verdicts->end())
                throw std::runtime_error("shaping: no cached verdict for transition_id=" + t.id);
            const annotators::VerdictRecord& v = it->second;
            if (v.parse_status == annotators::ParseStatus::Unparseable) {
                out.unparseable_verdict = true;
                return out;
            }
            out.beta_fired = t.event == SubgoalEvent::KeyPickedUp ? v.matched.pickup
                                                                  : v.matched.unlock;
            return out;
        }
        case ShapingSource::LiveBackend: {
            if (!config.live)
                throw std::runtime_error("shaping: LiveBackend source without an annotator");
            auto spec = promptkit::config_by_name(config.live_config_name);
            if (!spec)
                throw std::runtime_error("shaping: unknown prompt config '" +
                                         config.live_config_name + "'");
            promptkit::PromptText prompt = promptkit::compose(*spec, t);
            annotators::AnnotationVerdict verdict = config.live->annotate(prompt, t);
            if (verdict.parse_status == annotators::ParseStatus::Unparseable) {
                out.unparseable_verdict = true;
                return out;
            }
            out.beta_fired = t.event == SubgoalEvent::KeyPickedUp
                                 ? verdict.matched_canonical.pickup
                                 : verdict.matched_canonical.unlock;
            return out;
        }
    }
    return out;
}

}  // namespace

ShapedReward shaped_reward(const Transition& t, const ShapingConfig& config) {
    if (config.subgoal_bonus < 0.0) throw std::runtime_error("shaping: bonus must be >= 0");

    if (config.mode == ShapingMode::PotentialBased) {
        ShapedReward out;
        out.reward = t.task_reward + config.gamma * progress_potential(t.after) -
                     progress_potential(t.before);
        out.beta_fired = t.event != SubgoalEvent::None;
        return out;
    }

    ShapedReward out = termination_signal(t, config);
    out.reward = t.task_reward + (out.beta_fired ? config.subgoal_bonus : 0.0);
    return out;
}

}  // namespace shaper
