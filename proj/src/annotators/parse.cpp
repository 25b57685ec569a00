#include "annotators/parse.hpp"

#include <optional>

#include "support/strings.hpp"

namespace annotators {

std::string parse_status_name(ParseStatus s) {
    switch (s) {
        case ParseStatus::Ok: return "ok";
        case ParseStatus::PartiallyParsed: return "partial";
        case ParseStatus::Unparseable: return "unparseable";
    }
    return "unparseable";
}

namespace {

bool is_quote(char c) { return c == '\'' || c == '"'; }

// Spans of [start, end) for every balanced top-level {...} block in text.
std::vector<std::pair<size_t, size_t>> balanced_blocks(const std::string& text, size_t from,
                                                       size_t to) {
    std::vector<std::pair<size_t, size_t>> blocks;
    int depth = 0;
    size_t start = 0;
    char quote = 0;
    for (size_t i = from; i < to; ++i) {
        char c = text[i];
        if (quote) {
            if (c == '\\') {
                ++i;
            } else if (c == quote) {
                quote = 0;
            }
            continue;
        }
        if (is_quote(c) && depth > 0) {
            quote = c;
        } else if (c == '{') {
            if (depth == 0) start = i;
            ++depth;
        } else if (c == '}') {
            if (depth > 0) {
                --depth;
                if (depth == 0) blocks.emplace_back(start, i + 1);
            }
        }
    }
    return blocks;
}

// Fenced code sections (``` ... ```). An unterminated fence extends to the
// end of the text, which keeps truncated responses parseable.
std::vector<std::pair<size_t, size_t>> fenced_regions(const std::string& text) {
    std::vector<std::pair<size_t, size_t>> regions;
    size_t pos = 0;
    std::optional<size_t> open;
    while (pos < text.size()) {
        size_t fence = text.find("```", pos);
        if (fence == std::string::npos) break;
        if (!open) {
            size_t eol = text.find('\n', fence);
            open = (eol == std::string::npos) ? text.size() : eol + 1;
            pos = (eol == std::string::npos) ? text.size() : eol + 1;
        } else {
            regions.emplace_back(*open, fence);
            open.reset();
            pos = fence + 3;
        }
    }
    if (open) regions.emplace_back(*open, text.size());
    return regions;
}

// Strips python-style comments (outside strings) from a block interior.
std::string strip_comments(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    char quote = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (quote) {
            out += c;
            if (c == '\\' && i + 1 < s.size()) {
                out += s[++i];
            } else if (c == quote) {
                quote = 0;
            }
            continue;
        }
        if (is_quote(c)) {
            quote = c;
            out += c;
        } else if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
            if (i < s.size()) out += '\n';
        } else {
            out += c;
        }
    }
    return out;
}

// Splits a block interior into top-level comma-separated items.
std::vector<std::string> split_pairs(const std::string& s) {
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    char quote = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (quote) {
            cur += c;
            if (c == '\\' && i + 1 < s.size()) {
                cur += s[++i];
            } else if (c == quote) {
                quote = 0;
            }
            continue;
        }
        if (is_quote(c)) {
            quote = c;
            cur += c;
        } else if (c == '{' || c == '[') {
            ++depth;
            cur += c;
        } else if (c == '}' || c == ']') {
            --depth;
            cur += c;
        } else if (c == ',' && depth == 0) {
            items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    items.push_back(cur);
    return items;
}

std::optional<std::string> parse_key(const std::string& raw) {
    std::string t = support::trim(raw);
    if (t.empty()) return std::nullopt;
    if (is_quote(t.front())) {
        char quote = t.front();
        if (t.size() < 2 || t.back() != quote) return std::nullopt;
        std::string out;
        for (size_t i = 1; i + 1 < t.size(); ++i) {
            if (t[i] == '\\' && i + 2 < t.size()) {
                out += t[i + 1];
                ++i;
            } else {
                out += t[i];
            }
        }
        return out;
    }
    return t;
}

std::optional<bool> parse_bool(const std::string& raw) {
    std::string t = support::trim(raw);
    if (t == "True" || t == "true") return true;
    if (t == "False" || t == "false") return false;
    return std::nullopt;
}

// Splits one item at the first top-level ':' outside strings.
std::optional<std::pair<std::string, std::string>> split_key_value(const std::string& item) {
    char quote = 0;
    for (size_t i = 0; i < item.size(); ++i) {
        char c = item[i];
        if (quote) {
            if (c == '\\') {
                ++i;
            } else if (c == quote) {
                quote = 0;
            }
            continue;
        }
        if (is_quote(c)) {
            quote = c;
        } else if (c == ':') {
            return std::make_pair(item.substr(0, i), item.substr(i + 1));
        }
    }
    return std::nullopt;
}

struct BlockParse {
    FlagList flags;
    int attempted = 0;
    int parsed = 0;
};

BlockParse parse_block(const std::string& interior) {
    BlockParse result;
    for (const std::string& item : split_pairs(strip_comments(interior))) {
        if (support::trim_view(item).empty()) continue;  // trailing comma
        auto kv = split_key_value(item);
        if (!kv) {
            ++result.attempted;
            continue;
        }
        ++result.attempted;
        auto key = parse_key(kv->first);
        auto value = parse_bool(kv->second);
        if (!key || !value) continue;
        bool replaced = false;
        for (auto& [name, flag] : result.flags) {
            if (name == *key) {
                flag = *value;
                replaced = true;
                break;
            }
        }
        if (!replaced) result.flags.emplace_back(*key, *value);
        ++result.parsed;
    }
    return result;
}

bool has_pair_colon(const std::string& text, size_t from, size_t to) {
    char quote = 0;
    for (size_t i = from; i < to; ++i) {
        char c = text[i];
        if (quote) {
            if (c == '\\') {
                ++i;
            } else if (c == quote) {
                quote = 0;
            }
            continue;
        }
        if (is_quote(c)) {
            quote = c;
        } else if (c == ':') {
            return true;
        }
    }
    return false;
}

}  // namespace

ParsedResponse parse_response(const std::string& text) {
    std::vector<std::pair<size_t, size_t>> candidates;
    for (auto [from, to] : fenced_regions(text)) {
        for (auto block : balanced_blocks(text, from, to)) {
            if (has_pair_colon(text, block.first + 1, block.second - 1)) candidates.push_back(block);
        }
    }
    if (candidates.empty()) {
        for (auto block : balanced_blocks(text, 0, text.size())) {
            if (has_pair_colon(text, block.first + 1, block.second - 1)) candidates.push_back(block);
        }
    }

    ParsedResponse out;
    if (candidates.empty()) return out;

    auto [from, to] = candidates.back();
    BlockParse block = parse_block(text.substr(from + 1, to - from - 2));
    out.flags = std::move(block.flags);
    if (block.parsed == 0) {
        out.flags.clear();
        out.status = ParseStatus::Unparseable;
    } else if (block.parsed < block.attempted) {
        out.status = ParseStatus::PartiallyParsed;
    } else {
        out.status = ParseStatus::Ok;
    }
    return out;
}

}  // namespace annotators
