#pragma once

#include <string>
#include <utility>
#include <vector>

namespace annotators {

enum class ParseStatus : std::uint8_t {
    Ok,
    PartiallyParsed,
    Unparseable,
};

std::string parse_status_name(ParseStatus s);

// Insertion-ordered subgoal -> flag map, as reported by the model.
using FlagList = std::vector<std::pair<std::string, bool>>;

struct ParsedResponse {
    FlagList flags;
    ParseStatus status = ParseStatus::Unparseable;
};

// Pulls a subgoal dictionary out of free-form model output. Looks for the
// last brace-balanced block that contains ':' pairs, preferring blocks inside
// fenced code sections over bare braces. Keys may be quoted (single or
// double, with escapes) or bare; values must be one of True/False/true/false.
// Trailing commas and '#' comments are tolerated. Never throws: failures are
// encoded in the status (Unparseable => empty flags).
ParsedResponse parse_response(const std::string& text);

}  // namespace annotators
