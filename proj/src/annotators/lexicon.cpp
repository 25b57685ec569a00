#include "annotators/lexicon.hpp"

#include "support/strings.hpp"

namespace annotators {

namespace {

bool matches_any(const std::vector<CanonicalLexicon::Pattern>& patterns, const std::string& lower) {
    for (const auto& pattern : patterns) {
        bool all = true;
        for (const auto& keyword : pattern) {
            if (!support::contains(lower, keyword)) {
                all = false;
                break;
            }
        }
        if (all && !pattern.empty()) return true;
    }
    return false;
}

}  // namespace

bool CanonicalLexicon::matches_pickup(const std::string& subgoal_name) const {
    return matches_any(pickup_patterns, support::to_lower(subgoal_name));
}

bool CanonicalLexicon::matches_unlock(const std::string& subgoal_name) const {
    return matches_any(unlock_patterns, support::to_lower(subgoal_name));
}

CanonicalFlags match_canonical(const FlagList& flags, const CanonicalLexicon& lexicon) {
    CanonicalFlags out;
    for (const auto& [name, value] : flags) {
        if (!value) continue;
        std::string lower = support::to_lower(name);
        if (matches_any(lexicon.pickup_patterns, lower)) out.pickup = true;
        if (matches_any(lexicon.unlock_patterns, lower)) out.unlock = true;
    }
    return out;
}

}  // namespace annotators
