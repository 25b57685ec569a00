#include "annotators/backend.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "annotators/verdict_io.hpp"

namespace annotators {

AnnotationVerdict verdict_from_raw(RawResponse raw, const CanonicalLexicon& lexicon) {
    AnnotationVerdict verdict;
    ParsedResponse parsed = parse_response(raw.text);
    verdict.subgoal_flags = std::move(parsed.flags);
    verdict.parse_status = parsed.status;
    verdict.matched_canonical = match_canonical(verdict.subgoal_flags, lexicon);
    verdict.raw = std::move(raw);
    return verdict;
}

AnnotationVerdict OracleAnnotator::annotate(const promptkit::PromptText& prompt,
                                            const keyroom::Transition& transition) {
    using keyroom::SubgoalEvent;
    bool pickup = transition.event == SubgoalEvent::KeyPickedUp;
    bool unlock = transition.event == SubgoalEvent::DoorUnlocked;

    AnnotationVerdict verdict;
    verdict.subgoal_flags = {
        {keyroom::kPickupSubgoal, pickup},
        {keyroom::kUnlockSubgoal, unlock},
    };
    verdict.matched_canonical = {pickup, unlock};
    verdict.parse_status = ParseStatus::Ok;
    verdict.raw.backend_id = id();
    verdict.raw.prompt_id = prompt.prompt_id;
    verdict.raw.text = std::string("{\n    \"") + keyroom::kPickupSubgoal +
                       "\": " + (pickup ? "True" : "False") + ",\n    \"" +
                       keyroom::kUnlockSubgoal + "\": " + (unlock ? "True" : "False") + ",\n}";
    return verdict;
}

MockAnnotator::MockAnnotator(std::vector<std::string> script, CanonicalLexicon lexicon)
    : script_(std::move(script)), lexicon_(std::move(lexicon)) {
    if (script_.empty()) throw std::runtime_error("mock annotator: empty script");
}

AnnotationVerdict MockAnnotator::annotate(const promptkit::PromptText& prompt,
                                          const keyroom::Transition&) {
    RawResponse raw;
    raw.text = script_[cursor_.fetch_add(1) % script_.size()];
    raw.backend_id = id();
    raw.prompt_id = prompt.prompt_id;
    return verdict_from_raw(std::move(raw), lexicon_);
}

RecordedFileAnnotator::RecordedFileAnnotator(const std::filesystem::path& verdicts_path,
                                             CanonicalLexicon lexicon)
    : lexicon_(std::move(lexicon)), path_(verdicts_path) {
    for (const VerdictRecord& record : load_verdicts(verdicts_path)) {
        Entry entry{record.raw_text, record.latency_ms};
        if (!record.prompt_id.empty()) by_prompt_.emplace_back(record.prompt_id, entry);
        if (!record.transition_id.empty()) by_transition_.emplace_back(record.transition_id, entry);
    }
}

AnnotationVerdict RecordedFileAnnotator::annotate(const promptkit::PromptText& prompt,
                                                  const keyroom::Transition& transition) {
    const Entry* found = nullptr;
    for (const auto& [pid, entry] : by_prompt_) {
        if (pid == prompt.prompt_id) {
            found = &entry;
            break;
        }
    }
    if (!found) {
        for (const auto& [tid, entry] : by_transition_) {
            if (tid == transition.id) {
                found = &entry;
                break;
            }
        }
    }
    if (!found)
        throw std::runtime_error("recorded annotator: no entry for prompt_id=" + prompt.prompt_id +
                                 " transition_id=" + transition.id + " in " + path_.string());
    RawResponse raw;
    raw.text = found->raw_text;
    raw.latency_ms = found->latency_ms;
    raw.backend_id = id();
    raw.prompt_id = prompt.prompt_id;
    return verdict_from_raw(std::move(raw), lexicon_);
}

std::vector<AnnotationVerdict> annotate_many(
    Annotator& annotator, const std::vector<promptkit::PromptText>& prompts,
    const std::vector<keyroom::Transition>& transitions, int parallelism,
    const std::function<void(std::size_t)>& progress) {
    if (prompts.size() != transitions.size())
        throw std::runtime_error("annotate_many: prompt/transition count mismatch");
    std::vector<AnnotationVerdict> results(prompts.size());
    if (prompts.empty()) return results;

    if (parallelism <= 1) {
        for (std::size_t i = 0; i < prompts.size(); ++i) {
            results[i] = annotator.annotate(prompts[i], transitions[i]);
            if (progress) progress(i + 1);
        }
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= prompts.size()) return;
            try {
                results[i] = annotator.annotate(prompts[i], transitions[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
            std::size_t n = done.fetch_add(1) + 1;
            if (progress) progress(n);
        }
    };
    std::vector<std::thread> threads;
    int n_threads = std::min<int>(parallelism, static_cast<int>(prompts.size()));
    threads.reserve(static_cast<size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

}  // namespace annotators
