#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "annotators/lexicon.hpp"
#include "annotators/parse.hpp"
#include "keyroom/state.hpp"
#include "promptkit/prompt.hpp"

namespace annotators {

struct RawResponse {
    std::string text;  // verbatim model output (capped only beyond max_raw_bytes)
    std::int64_t latency_ms = 0;
    std::string backend_id;
    std::string prompt_id;
};

inline constexpr std::size_t kDefaultMaxRawBytes = 16 * 1024;

struct AnnotationVerdict {
    FlagList subgoal_flags;
    CanonicalFlags matched_canonical;
    ParseStatus parse_status = ParseStatus::Unparseable;
    RawResponse raw;
};

// Builds a verdict from raw model output: parse, then lexicon-match.
AnnotationVerdict verdict_from_raw(RawResponse raw, const CanonicalLexicon& lexicon = {});

// Interchangeable verdict sources. Implementations must be safe for
// concurrent annotate() calls.
class Annotator {
public:
    virtual ~Annotator() = default;
    virtual std::string id() const = 0;
    virtual AnnotationVerdict annotate(const promptkit::PromptText& prompt,
                                       const keyroom::Transition& transition) = 0;
};

// Ground-truth oracle: flags derived from the transition's subgoal event.
class OracleAnnotator : public Annotator {
public:
    std::string id() const override { return "oracle"; }
    AnnotationVerdict annotate(const promptkit::PromptText& prompt,
                               const keyroom::Transition& transition) override;
};

// Replays a fixed script of raw responses through the full parse path.
class MockAnnotator : public Annotator {
public:
    explicit MockAnnotator(std::vector<std::string> script, CanonicalLexicon lexicon = {});
    std::string id() const override { return "mock"; }
    AnnotationVerdict annotate(const promptkit::PromptText& prompt,
                               const keyroom::Transition& transition) override;

private:
    std::vector<std::string> script_;
    CanonicalLexicon lexicon_;
    std::atomic<std::size_t> cursor_{0};
};

// Serves verdicts previously persisted to a verdicts.jsonl file; looks up by
// prompt_id first, then transition_id. Missing entries are errors.
class RecordedFileAnnotator : public Annotator {
public:
    explicit RecordedFileAnnotator(const std::filesystem::path& verdicts_path,
                                   CanonicalLexicon lexicon = {});
    std::string id() const override { return "recorded"; }
    AnnotationVerdict annotate(const promptkit::PromptText& prompt,
                               const keyroom::Transition& transition) override;

private:
    struct Entry {
        std::string raw_text;
        std::int64_t latency_ms = 0;
    };
    std::vector<std::pair<std::string, Entry>> by_prompt_;
    std::vector<std::pair<std::string, Entry>> by_transition_;
    CanonicalLexicon lexicon_;
    std::filesystem::path path_;
};

struct HttpLlmOptions {
    std::string endpoint_url;  // e.g. http://127.0.0.1:8080/v1/chat/completions
    std::string model;
    std::string api_key;  // sent as a bearer token, never persisted
    int timeout_seconds = 120;
    int max_retries = 3;
    int backoff_initial_ms = 1000;
    int max_tokens = 1024;
    std::optional<std::filesystem::path> request_template_path;
    std::string response_path = "choices.0.message.content";
    std::optional<std::filesystem::path> cache_dir;  // content-addressed response cache
    std::size_t max_raw_bytes = kDefaultMaxRawBytes;
};

// Chat-completion-style HTTP backend with greedy decoding (temperature 0),
// retry with exponential backoff, and an append-only response cache keyed by
// (backend id, model, prompt hash).
std::unique_ptr<Annotator> make_http_annotator(HttpLlmOptions options, CanonicalLexicon lexicon = {});

// Fans annotate() out over up to `parallelism` worker threads; results come
// back in input order. Annotator implementations must tolerate the fan-out.
std::vector<AnnotationVerdict> annotate_many(
    Annotator& annotator, const std::vector<promptkit::PromptText>& prompts,
    const std::vector<keyroom::Transition>& transitions, int parallelism = 1,
    const std::function<void(std::size_t)>& progress = {});

}  // namespace annotators
