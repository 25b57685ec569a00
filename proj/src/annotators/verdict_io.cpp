#include "annotators/verdict_io.hpp"

#include <json.hpp>

#include "support/files.hpp"

namespace annotators {

using ordered_json = nlohmann::ordered_json;

VerdictRecord to_record(const AnnotationVerdict& verdict, const std::string& transition_id,
                        const std::string& config_name) {
    VerdictRecord record;
    record.prompt_id = verdict.raw.prompt_id;
    record.transition_id = transition_id;
    record.config_name = config_name;
    record.backend = verdict.raw.backend_id;
    record.raw_text = verdict.raw.text;
    record.flags = verdict.subgoal_flags;
    record.matched = verdict.matched_canonical;
    record.parse_status = verdict.parse_status;
    record.latency_ms = verdict.raw.latency_ms;
    return record;
}

std::string verdict_jsonl_line(const VerdictRecord& record) {
    ordered_json flags = ordered_json::object();
    for (const auto& [name, value] : record.flags) flags[name] = value;
    ordered_json j{
        {"prompt_id", record.prompt_id},
        {"transition_id", record.transition_id},
        {"config_name", record.config_name},
        {"backend", record.backend},
        {"raw_text", record.raw_text},
        {"flags", flags},
        {"matched",
         {{keyroom::kPickupSubgoal, record.matched.pickup},
          {keyroom::kUnlockSubgoal, record.matched.unlock}}},
        {"parse_status", parse_status_name(record.parse_status)},
        {"latency_ms", record.latency_ms},
    };
    return j.dump();
}

void save_verdicts(const std::filesystem::path& path, const std::vector<VerdictRecord>& records) {
    std::string out;
    for (const auto& record : records) {
        out += verdict_jsonl_line(record);
        out += '\n';
    }
    support::write_file_atomic(path, out);
}

std::vector<VerdictRecord> load_verdicts(const std::filesystem::path& path) {
    std::vector<VerdictRecord> records;
    for (const auto& line : support::read_jsonl_lines(path)) {
        ordered_json j;
        try {
            j = ordered_json::parse(line.text);
        } catch (const std::exception& e) {
            throw std::runtime_error("verdicts: parse error at byte " +
                                     std::to_string(line.byte_offset) + " of " + path.string() +
                                     ": " + e.what());
        }
        VerdictRecord record;
        record.prompt_id = j.value("prompt_id", "");
        record.transition_id = j.value("transition_id", "");
        record.config_name = j.value("config_name", "");
        record.backend = j.value("backend", "");
        record.raw_text = j.value("raw_text", "");
        if (j.contains("flags")) {
            for (auto it = j["flags"].begin(); it != j["flags"].end(); ++it)
                record.flags.emplace_back(it.key(), it.value().get<bool>());
        }
        if (j.contains("matched")) {
            record.matched.pickup = j["matched"].value(keyroom::kPickupSubgoal, false);
            record.matched.unlock = j["matched"].value(keyroom::kUnlockSubgoal, false);
        }
        std::string status = j.value("parse_status", "unparseable");
        record.parse_status = status == "ok"        ? ParseStatus::Ok
                              : status == "partial" ? ParseStatus::PartiallyParsed
                                                    : ParseStatus::Unparseable;
        record.latency_ms = j.value("latency_ms", static_cast<std::int64_t>(0));
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace annotators
