#pragma once

#include <string>
#include <vector>

#include "annotators/parse.hpp"

namespace annotators {

// Matched canonical subgoal flags; the only two canonical subgoals are
// "pick up the key" and "open the door".
struct CanonicalFlags {
    bool pickup = false;
    bool unlock = false;

    bool any() const { return pickup || unlock; }
    bool operator==(const CanonicalFlags&) const = default;
};

// Keyword sets mapping free-form subgoal names onto the canonical subgoals.
// A pattern matches when every keyword occurs in the lowercased name; a
// canonical flag is raised when any pattern of its list matches.
struct CanonicalLexicon {
    using Pattern = std::vector<std::string>;

    std::vector<Pattern> pickup_patterns = {
        {"key", "pick"}, {"key", "collect"}, {"key", "get"}, {"key", "grab"}, {"key pickup"},
    };
    std::vector<Pattern> unlock_patterns = {
        {"door", "unlock"},
        {"door", "open"},
        {"unlock"},
    };

    bool matches_pickup(const std::string& subgoal_name) const;
    bool matches_unlock(const std::string& subgoal_name) const;
};

// A canonical subgoal is true iff some reported subgoal whose name matches the
// lexicon carries a true flag.
CanonicalFlags match_canonical(const FlagList& flags, const CanonicalLexicon& lexicon = {});

}  // namespace annotators
