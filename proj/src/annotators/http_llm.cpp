#include <chrono>
#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "annotators/backend.hpp"
#include "support/files.hpp"
#include "support/hash.hpp"
#include "support/strings.hpp"

namespace annotators {

namespace {

using nlohmann::json;

struct ParsedUrl {
    std::string base;  // scheme://host[:port]
    std::string path;  // /v1/chat/completions
};

ParsedUrl parse_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw std::runtime_error("http annotator: endpoint url must include a scheme: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

// Recursively substitutes {{prompt}} / {{model}} / {{max_tokens}} placeholders
// in request-template string values.
json substitute(const json& node, const std::string& prompt, const HttpLlmOptions& options) {
    if (node.is_string()) {
        std::string s = node.get<std::string>();
        if (s == "{{prompt}}") return prompt;
        if (s == "{{model}}") return options.model;
        if (s == "{{max_tokens}}") return options.max_tokens;
        auto pos = s.find("{{prompt}}");
        if (pos != std::string::npos) return s.replace(pos, 10, prompt);
        return s;
    }
    if (node.is_object()) {
        json out = json::object();
        for (auto it = node.begin(); it != node.end(); ++it)
            out[it.key()] = substitute(it.value(), prompt, options);
        return out;
    }
    if (node.is_array()) {
        json out = json::array();
        for (const auto& item : node) out.push_back(substitute(item, prompt, options));
        return out;
    }
    return node;
}

std::string extract_by_path(const json& doc, const std::string& dotted) {
    const json* node = &doc;
    size_t start = 0;
    while (start <= dotted.size()) {
        size_t dot = dotted.find('.', start);
        std::string part = dotted.substr(start, dot == std::string::npos ? dot : dot - start);
        if (!part.empty()) {
            if (node->is_array()) {
                size_t idx = static_cast<size_t>(std::stoul(part));
                if (idx >= node->size())
                    throw std::runtime_error("http annotator: response path index out of range: " + part);
                node = &(*node)[idx];
            } else if (node->is_object() && node->contains(part)) {
                node = &(*node)[part];
            } else {
                throw std::runtime_error("http annotator: response lacks field '" + part + "'");
            }
        }
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    if (!node->is_string())
        throw std::runtime_error("http annotator: response content is not a string");
    return node->get<std::string>();
}

class HttpLlmAnnotator : public Annotator {
public:
    HttpLlmAnnotator(HttpLlmOptions options, CanonicalLexicon lexicon)
        : options_(std::move(options)), lexicon_(std::move(lexicon)) {
        if (options_.endpoint_url.empty())
            throw std::runtime_error("http annotator: endpoint url is required");
        if (options_.request_template_path)
            template_ = json::parse(support::read_file(*options_.request_template_path));
    }

    std::string id() const override { return "http:" + options_.model; }

    AnnotationVerdict annotate(const promptkit::PromptText& prompt,
                               const keyroom::Transition&) override {
        RawResponse raw;
        raw.backend_id = id();
        raw.prompt_id = prompt.prompt_id;

        const std::string cache_key = cache_key_for(prompt);
        if (auto cached = cache_get(cache_key)) {
            raw.text = cached->first;
            raw.latency_ms = cached->second;
            return verdict_from_raw(std::move(raw), lexicon_);
        }

        const std::string body = request_body(prompt.text);
        ParsedUrl url = parse_url(options_.endpoint_url);
        std::string last_error;
        for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
            if (attempt > 0) {
                std::this_thread::sleep_for(std::chrono::milliseconds(
                    options_.backoff_initial_ms * (1 << (attempt - 1))));
            }
            httplib::Client client(url.base);
            client.set_connection_timeout(options_.timeout_seconds, 0);
            client.set_read_timeout(options_.timeout_seconds, 0);
            httplib::Headers headers;
            if (!options_.api_key.empty())
                headers.emplace("Authorization", "Bearer " + options_.api_key);
            auto start = std::chrono::steady_clock::now();
            httplib::Result result = client.Post(url.path, headers, body, "application/json");
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            if (!result) {
                last_error = "transport error: " + httplib::to_string(result.error());
                continue;
            }
            if (result->status < 200 || result->status >= 300) {
                last_error = "http status " + std::to_string(result->status);
                continue;
            }
            std::string content;
            try {
                content = extract_by_path(json::parse(result->body), options_.response_path);
            } catch (const std::exception& e) {
                last_error = e.what();
                continue;
            }
            if (content.size() > options_.max_raw_bytes) content.resize(options_.max_raw_bytes);
            raw.text = std::move(content);
            raw.latency_ms = elapsed;
            cache_put(cache_key, raw.text, raw.latency_ms);
            return verdict_from_raw(std::move(raw), lexicon_);
        }
        throw std::runtime_error("http annotator: request failed for prompt_id=" +
                                 prompt.prompt_id + " after " +
                                 std::to_string(options_.max_retries + 1) + " attempts (" +
                                 last_error + ")");
    }

private:
    std::string request_body(const std::string& prompt_text) const {
        if (template_) return substitute(*template_, prompt_text, options_).dump();
        json j{
            {"model", options_.model},
            {"messages", json::array({json{{"role", "user"}, {"content", prompt_text}}})},
            {"temperature", 0},
            {"max_tokens", options_.max_tokens},
        };
        return j.dump();
    }

    std::string cache_key_for(const promptkit::PromptText& prompt) const {
        support::Fnv1a64 h;
        h.update(id()).update("|").update(options_.model).update("|").update(prompt.prompt_id);
        return h.hex();
    }

    std::optional<std::pair<std::string, std::int64_t>> cache_get(const std::string& key) const {
        if (!options_.cache_dir) return std::nullopt;
        auto path = *options_.cache_dir / (key + ".json");
        if (!std::filesystem::exists(path)) return std::nullopt;
        json j = json::parse(support::read_file(path));
        return std::make_pair(j.value("raw_text", ""), j.value("latency_ms", static_cast<std::int64_t>(0)));
    }

    void cache_put(const std::string& key, const std::string& text, std::int64_t latency_ms) const {
        if (!options_.cache_dir) return;
        auto path = *options_.cache_dir / (key + ".json");
        if (std::filesystem::exists(path)) return;  // append-only, first write wins
        json j{{"raw_text", text}, {"latency_ms", latency_ms}};
        support::write_file_atomic(path, j.dump());
    }

    HttpLlmOptions options_;
    CanonicalLexicon lexicon_;
    std::optional<json> template_;
};

}  // namespace

std::unique_ptr<Annotator> make_http_annotator(HttpLlmOptions options, CanonicalLexicon lexicon) {
    return std::make_unique<HttpLlmAnnotator>(std::move(options), std::move(lexicon));
}

}  // namespace annotators
