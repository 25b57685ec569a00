#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "annotators/backend.hpp"

namespace annotators {

// One persisted verdict line; the on-disk contract shared by annotate,
// evaluate and the recorded-file backend.
struct VerdictRecord {
    std::string prompt_id;
    std::string transition_id;
    std::string config_name;
    std::string backend;
    std::string raw_text;
    FlagList flags;
    CanonicalFlags matched;
    ParseStatus parse_status = ParseStatus::Unparseable;
    std::int64_t latency_ms = 0;
};

VerdictRecord to_record(const AnnotationVerdict& verdict, const std::string& transition_id,
                        const std::string& config_name);

std::string verdict_jsonl_line(const VerdictRecord& record);

void save_verdicts(const std::filesystem::path& path, const std::vector<VerdictRecord>& records);
std::vector<VerdictRecord> load_verdicts(const std::filesystem::path& path);

}  // namespace annotators
