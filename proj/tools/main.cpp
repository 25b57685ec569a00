#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "annotators/backend.hpp"
#include "annotators/verdict_io.hpp"
#include "datasets/manifest.hpp"
#include "keyroom/search.hpp"
#include "metrics/report.hpp"
#include "promptkit/prompt.hpp"
#include "shaper/qlearn.hpp"
#include "shaper/value_iteration.hpp"
#include "support/files.hpp"
#include "support/strings.hpp"
#include "textview/render.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

bool g_quiet = false;

// info-level progress lines; file outputs and errors are never gated
std::ostream& info() {
    static std::ofstream null_sink;
    return g_quiet ? static_cast<std::ostream&>(null_sink) : std::cout;
}

// Flag precedence is flags > environment > config file > defaults. CLI11's
// own config hook applies config before env (the wrong way around), so the
// env/config layers are resolved here by injecting argv entries for options
// the user did not pass explicitly.
struct LayeredArgs {
    std::vector<std::string> storage;
    std::vector<char*> argv;
};

std::map<std::string, std::string> load_flat_config(const std::string& path) {
    std::map<std::string, std::string> values;
    for (const std::string& raw : support::split_lines(support::read_file(path))) {
        std::string line = support::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config file: expected key=value, got '" + line + "'");
        values[support::trim(line.substr(0, eq))] = support::trim(line.substr(eq + 1));
    }
    return values;
}

LayeredArgs layer_args(int argc, char** argv) {
    std::vector<std::string> original(argv, argv + argc);
    auto has_flag = [&](const std::string& flag) {
        for (const auto& arg : original)
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
        return false;
    };

    std::string config_path;
    for (size_t i = 0; i + 1 < original.size(); ++i)
        if (original[i] == "--config-file") config_path = original[i + 1];
    if (config_path.empty())
        if (const char* env = std::getenv("KEYROOM_CONFIG_FILE")) config_path = env;
    std::map<std::string, std::string> config;
    if (!config_path.empty()) config = load_flat_config(config_path);

    // key, flag, env var, global or subcommand-scoped
    struct Layered {
        const char* key;
        const char* flag;
        const char* env;
        bool global;
    };
    static const Layered layered[] = {
        {"workspace", "--workspace", "KEYROOM_WORKSPACE", true},
        {"log-level", "--log-level", "KEYROOM_LOG_LEVEL", true},
        {"seed", "--seed", "KEYROOM_SEED", false},
        {"endpoint", "--endpoint", "KEYROOM_ENDPOINT", false},
        {"model", "--model", "KEYROOM_MODEL", false},
        {"api-key", "--api-key", "KEYROOM_API_KEY", false},
        {"cache-dir", "--cache-dir", "KEYROOM_CACHE_DIR", false},
    };

    // which layered flags each subcommand accepts
    static const std::map<std::string, std::set<std::string>> scoped_flags = {
        {"collect", {"--seed"}},
        {"render", {"--seed"}},
        {"annotate", {"--endpoint", "--model", "--api-key", "--cache-dir"}},
        {"train", {"--endpoint", "--model", "--api-key", "--cache-dir"}},
    };
    std::string subcommand;
    for (size_t i = 1; i < original.size(); ++i) {
        if (scoped_flags.count(original[i]) || original[i] == "prompt" ||
            original[i] == "annotate-human" || original[i] == "evaluate" ||
            original[i] == "ablate") {
            subcommand = original[i];
            break;
        }
    }

    std::vector<std::string> global_extra, scoped_extra;
    for (const Layered& layer : layered) {
        if (has_flag(layer.flag)) continue;
        if (!layer.global) {
            auto it = scoped_flags.find(subcommand);
            if (it == scoped_flags.end() || !it->second.count(layer.flag)) continue;
        }
        const char* env = std::getenv(layer.env);
        std::string value = env ? env : (config.count(layer.key) ? config.at(layer.key) : "");
        if (value.empty()) continue;
        auto& target = layer.global ? global_extra : scoped_extra;
        target.push_back(layer.flag);
        target.push_back(value);
    }

    LayeredArgs out;
    out.storage.push_back(original[0]);
    for (const auto& arg : global_extra) out.storage.push_back(arg);
    for (size_t i = 1; i < original.size(); ++i) out.storage.push_back(original[i]);
    for (const auto& arg : scoped_extra) out.storage.push_back(arg);
    for (auto& arg : out.storage) out.argv.push_back(arg.data());
    return out;
}

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Every run drops a resolved-config snapshot next to its outputs.
void write_config_snapshot(const fs::path& out_dir, const std::string& subcommand,
                           const ordered_json& resolved) {
    ordered_json snapshot;
    snapshot["subcommand"] = subcommand;
    snapshot["resolved"] = resolved;
    support::write_file_atomic(out_dir / ("config." + subcommand + ".json"),
                               snapshot.dump(2) + "\n");
}

datasets::DatasetManifest load_dataset_or_die(const std::string& path) {
    auto result = datasets::load_manifest(path);
    for (const auto& warning : result.warnings) std::cerr << "warning: " << warning << "\n";
    return std::move(result.manifest);
}

promptkit::PromptSpec spec_or_die(const std::string& config_name) {
    auto spec = promptkit::config_by_name(config_name);
    if (!spec) {
        std::string names;
        for (const auto& s : promptkit::config_matrix()) names += " " + s.name;
        throw std::runtime_error("unknown config '" + config_name + "'; available:" + names);
    }
    return *spec;
}

// ---- collect ----

int cmd_collect(std::uint64_t seed, int size, int max_rollouts, const std::string& out) {
    datasets::CollectOptions options;
    options.max_rollouts = max_rollouts;
    datasets::DatasetManifest manifest = datasets::collect_balanced(seed, size, options);
    manifest.created_at = now_iso8601();
    fs::path out_path(out);
    datasets::save_manifest(out_path, manifest);
    auto counts = manifest.counts();
    if (out_path.has_parent_path())
        write_config_snapshot(out_path.parent_path(), "collect",
                              ordered_json{{"seed", seed},
                                           {"size", size},
                                           {"max_rollouts", max_rollouts},
                                           {"out", out}});
    info() << "collected " << manifest.transitions.size() << " transitions (pickup "
           << counts.pickup << ", unlock " << counts.unlock << ", none " << counts.none
           << ", assisted episodes " << manifest.assisted_episodes << ") -> " << out << "\n";
    return 0;
}

// ---- render ----

int cmd_render(const std::string& dataset, int index, std::uint64_t seed,
               const std::string& view_name, bool no_separator) {
    textview::ViewKind view =
        view_name == "gamescreen" ? textview::ViewKind::GameScreen : textview::ViewKind::Cropped;
    if (!dataset.empty()) {
        datasets::DatasetManifest manifest = load_dataset_or_die(dataset);
        if (index < 0 || index >= static_cast<int>(manifest.transitions.size()))
            throw std::runtime_error("render: index out of range (dataset holds " +
                                     std::to_string(manifest.transitions.size()) + ")");
        std::cout << textview::render_transition(manifest.transitions[static_cast<size_t>(index)],
                                                 view, !no_separator, false)
                  << "\n";
        return 0;
    }
    auto layout = std::make_shared<const keyroom::GridLayout>(keyroom::generate_layout(seed));
    keyroom::GridState state = keyroom::initial_state(layout);
    std::cout << textview::render(state, view, !no_separator).joined() << "\n";
    return 0;
}

// ---- prompt ----

int cmd_prompt(const std::string& dataset, const std::string& config_name, int limit,
               const std::string& out) {
    promptkit::PromptSpec spec = spec_or_die(config_name);
    datasets::DatasetManifest manifest = load_dataset_or_die(dataset);
    int n = static_cast<int>(manifest.transitions.size());
    if (limit > 0) n = std::min(n, limit);

    std::string jsonl;
    for (int i = 0; i < n; ++i) {
        promptkit::PromptText prompt = promptkit::compose(spec, manifest.transitions[static_cast<size_t>(i)]);
        if (out.empty()) {
            std::cout << prompt.text;
            if (i + 1 < n) std::cout << "\n----------------------------------------\n";
        } else {
            ordered_json j{{"transition_id", prompt.transition_id},
                           {"config_name", spec.name},
                           {"prompt_id", prompt.prompt_id},
                           {"prompt", prompt.text}};
            jsonl += j.dump();
            jsonl += '\n';
        }
    }
    if (!out.empty()) {
        support::write_file_atomic(out, jsonl);
        fs::path out_path(out);
        if (out_path.has_parent_path())
            write_config_snapshot(out_path.parent_path(), "prompt",
                                  ordered_json{{"dataset", dataset},
                                               {"config", config_name},
                                               {"limit", limit},
                                               {"out", out}});
        info() << "wrote " << n << " prompts -> " << out << "\n";
    }
    return 0;
}

// ---- annotate ----

struct AnnotateArgs {
    std::string dataset;
    std::optional<std::uint64_t> layout_seed;  // annotate a layout's subgoal transitions instead
    std::string config_name = "cropped-provided";
    std::string backend = "oracle";
    std::string out;
    std::string endpoint;
    std::string model;
    std::string api_key;
    std::string recorded_path;
    std::string mock_script_dir;
    std::string cache_dir;
    std::string request_template;
    int parallel = 1;
    int max_retries = 3;
    int timeout_seconds = 120;
    int max_tokens = 1024;
};

std::unique_ptr<annotators::Annotator> make_backend(const AnnotateArgs& args) {
    if (args.backend == "oracle") return std::make_unique<annotators::OracleAnnotator>();
    if (args.backend == "recorded") {
        if (args.recorded_path.empty())
            throw std::runtime_error("annotate: --recorded-file is required for the recorded backend");
        return std::make_unique<annotators::RecordedFileAnnotator>(args.recorded_path);
    }
    if (args.backend == "mock") {
        if (args.mock_script_dir.empty())
            throw std::runtime_error("annotate: --mock-script-dir is required for the mock backend");
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(args.mock_script_dir))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        std::vector<std::string> script;
        for (const auto& f : files) script.push_back(support::read_file(f));
        return std::make_unique<annotators::MockAnnotator>(std::move(script));
    }
    if (args.backend == "http") {
        annotators::HttpLlmOptions options;
        options.endpoint_url = args.endpoint;
        options.model = args.model;
        options.api_key = args.api_key;
        options.max_retries = args.max_retries;
        options.timeout_seconds = args.timeout_seconds;
        options.max_tokens = args.max_tokens;
        if (!args.cache_dir.empty()) {
            fs::create_directories(args.cache_dir);
            options.cache_dir = fs::path(args.cache_dir);
        }
        if (!args.request_template.empty()) options.request_template_path = args.request_template;
        return annotators::make_http_annotator(std::move(options));
    }
    throw std::runtime_error("annotate: unknown backend '" + args.backend +
                             "' (expected oracle|http|mock|recorded)");
}

// The transitions to annotate: a dataset, or every reachable subgoal
// transition of one layout (what the cached training arm needs).
std::vector<keyroom::Transition> annotate_targets(const AnnotateArgs& args) {
    if (!args.dataset.empty()) return load_dataset_or_die(args.dataset).transitions;
    if (!args.layout_seed)
        throw std::runtime_error("annotate: provide --dataset or --layout-seed");
    auto layout = std::make_shared<const keyroom::GridLayout>(
        keyroom::generate_layout(*args.layout_seed));
    std::vector<keyroom::Transition> transitions;
    keyroom::for_each_reachable_edge(
        keyroom::initial_state(layout), 100000,
        [&](const keyroom::GridState& s, keyroom::Action a, const keyroom::StepResult& r) {
            if (r.event != keyroom::SubgoalEvent::None)
                transitions.push_back(keyroom::make_transition(s, a));
        },
        /*distinct_messages=*/true);
    return transitions;
}

int cmd_annotate(const AnnotateArgs& args) {
    promptkit::PromptSpec spec = spec_or_die(args.config_name);
    datasets::DatasetManifest manifest;
    manifest.transitions = annotate_targets(args);

    std::vector<promptkit::PromptText> prompts;
    prompts.reserve(manifest.transitions.size());
    std::size_t prompt_chars = 0;
    for (const auto& t : manifest.transitions) {
        prompts.push_back(promptkit::compose(spec, t));
        prompt_chars += prompts.back().text.size();
    }

    auto annotator = make_backend(args);
    auto started = std::chrono::steady_clock::now();
    auto verdicts = annotators::annotate_many(*annotator, prompts, manifest.transitions,
                                              args.parallel);
    auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();

    std::vector<annotators::VerdictRecord> records;
    records.reserve(verdicts.size());
    std::int64_t latency_total = 0;
    int unparseable = 0;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        records.push_back(annotators::to_record(verdicts[i], manifest.transitions[i].id, spec.name));
        latency_total += verdicts[i].raw.latency_ms;
        if (verdicts[i].parse_status == annotators::ParseStatus::Unparseable) ++unparseable;
    }
    annotators::save_verdicts(args.out, records);

    fs::path out_path(args.out);
    if (out_path.has_parent_path())
        write_config_snapshot(out_path.parent_path(), "annotate",
                              ordered_json{{"dataset", args.dataset},
                                           {"config", args.config_name},
                                           {"backend", annotator->id()},
                                           {"parallel", args.parallel},
                                           {"out", args.out}});

    // per-run cost accounting: prompt volume, parse failures, latency
    info() << "annotated " << records.size() << " transitions with " << annotator->id()
           << " (" << prompt_chars << " prompt chars, " << unparseable << " unparseable, "
           << "sum latency " << latency_total << " ms, wall " << wall_ms << " ms) -> "
           << args.out << "\n";
    return 0;
}

// ---- annotate-human ----

int cmd_annotate_human(const std::string& dataset, const std::string& config_name,
                       const std::string& out, const std::string& annotator_id) {
    promptkit::PromptSpec spec = spec_or_die(config_name);
    datasets::DatasetManifest manifest = load_dataset_or_die(dataset);

    datasets::ReferenceLabels labels;
    if (fs::exists(out)) {
        labels = datasets::load_reference(out);
        info() << "resuming: " << labels.entries.size() << " transitions already labeled\n";
    }

    enum class Answer { Yes, No, Skip, Eof };
    auto ask = [](const std::string& question) {
        for (;;) {
            std::cout << question << " [y/n/s=skip] " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) return Answer::Eof;
            if (line == "y" || line == "Y") return Answer::Yes;
            if (line == "n" || line == "N") return Answer::No;
            if (line == "s" || line == "S") return Answer::Skip;
        }
    };

    int answered = 0;
    for (const auto& t : manifest.transitions) {
        if (labels.find(t.id)) continue;  // resume without re-asking
        promptkit::PromptText prompt = promptkit::compose(spec, t);
        std::cout << "\n" << prompt.text << "\n";

        Answer pickup = ask(std::string("achieved: ") + keyroom::kPickupSubgoal + "?");
        if (pickup == Answer::Eof) break;
        Answer unlock = ask(std::string("achieved: ") + keyroom::kUnlockSubgoal + "?");
        if (unlock == Answer::Eof) break;

        datasets::ReferenceEntry entry;
        entry.annotator_id = annotator_id;
        entry.flags = {pickup == Answer::Yes, unlock == Answer::Yes};
        if (pickup == Answer::Skip || unlock == Answer::Skip) entry.note = "skipped/flagged";
        labels.upsert(t.id, entry);
        datasets::save_reference(out, labels);  // persist after every answer
        ++answered;
    }
    info() << "labeled " << answered << " new transitions -> " << out << "\n";
    return 0;
}

// ---- evaluate ----

int cmd_evaluate(const std::vector<std::string>& verdict_paths, const std::string& reference_path,
                 const std::string& dataset_path, const std::string& policy_name,
                 const std::string& out_dir) {
    metrics::PositivePolicy policy = policy_name == "any-true"
                                         ? metrics::PositivePolicy::AnyTrue
                                         : metrics::PositivePolicy::LexiconFiltered;

    datasets::ReferenceLabels reference;
    if (!reference_path.empty()) {
        reference = datasets::load_reference(reference_path);
    } else if (!dataset_path.empty()) {
        reference = datasets::ground_truth_reference(load_dataset_or_die(dataset_path));
    } else {
        throw std::runtime_error("evaluate: provide --reference or --dataset (ground truth)");
    }

    std::vector<metrics::MetricsRow> rows;
    int unparseable_total = 0;
    for (const auto& path : verdict_paths) {
        auto verdicts = annotators::load_verdicts(path);
        if (verdicts.empty()) throw std::runtime_error("evaluate: no verdicts in " + path);
        metrics::ScoreResult scored = metrics::score(verdicts, reference, policy);
        unparseable_total += scored.unparseable;
        std::string annotator = verdicts.front().backend;
        std::string config = verdicts.front().config_name;
        rows.push_back(metrics::derive(scored.counts, annotator, config));
    }

    metrics::Report rep = metrics::report(std::move(rows), policy, unparseable_total);
    fs::create_directories(out_dir);
    support::write_file_atomic(fs::path(out_dir) / "report.txt", rep.table_text);
    support::write_file_atomic(fs::path(out_dir) / "report.csv", rep.csv);
    support::write_file_atomic(fs::path(out_dir) / "summary.json", rep.summary_json);
    write_config_snapshot(out_dir, "evaluate",
                          ordered_json{{"verdicts", verdict_paths},
                                       {"reference", reference_path},
                                       {"dataset", dataset_path},
                                       {"policy", metrics::positive_policy_name(policy)}});
    std::cout << rep.table_text;
    return 0;
}

// ---- ablate ----

int cmd_ablate(const std::string& base_summary, const std::string& variant_summary,
               const std::string& out) {
    auto load_rows = [](const std::string& path) {
        ordered_json j = ordered_json::parse(support::read_file(path));
        std::vector<metrics::MetricsRow> rows;
        for (const auto& r : j.at("rows")) {
            metrics::MetricsRow row;
            row.annotator_name = r.at("annotator").get<std::string>();
            row.config_name = r.value("config", "");
            row.f1 = r.at("f1").get<double>();
            row.accuracy = r.at("accuracy").get<double>();
            row.precision = r.at("precision").get<double>();
            row.recall = r.at("recall").get<double>();
            rows.push_back(std::move(row));
        }
        return rows;
    };
    auto deltas = metrics::ablation_delta(load_rows(base_summary), load_rows(variant_summary));
    std::string csv = metrics::ablation_csv(deltas);
    if (out.empty()) {
        std::cout << csv;
    } else {
        support::write_file_atomic(out, csv);
        fs::path out_path(out);
        if (out_path.has_parent_path())
            write_config_snapshot(out_path.parent_path(), "ablate",
                                  ordered_json{{"base", base_summary}, {"variant", variant_summary}});
        info() << "wrote " << deltas.size() << " deltas -> " << out << "\n";
    }
    return 0;
}

// ---- train ----

int cmd_train(const std::string& arm, int episodes, const std::vector<std::uint64_t>& seeds,
              std::uint64_t layout_seed, const std::string& out, const std::string& verdicts_path,
              const std::string& endpoint, const std::string& model, const std::string& api_key,
              const std::string& cache_dir) {
    keyroom::GridLayout layout = keyroom::generate_layout(layout_seed);
    shaper::QHyperparams hp;
    hp.episodes = episodes;

    std::optional<shaper::ShapingConfig> shaping;
    if (arm == "sparse") {
        shaping = std::nullopt;
    } else if (arm == "oracle") {
        shaping = shaper::ShapingConfig{};
    } else if (arm == "cached") {
        if (verdicts_path.empty())
            throw std::runtime_error("train: --verdicts is required for the cached arm");
        shaper::ShapingConfig cfg;
        cfg.source = shaper::ShapingSource::CachedVerdicts;
        cfg.verdicts = std::make_shared<const std::unordered_map<std::string, annotators::VerdictRecord>>(
            shaper::index_verdicts(annotators::load_verdicts(verdicts_path)));
        shaping = cfg;
    } else if (arm == "live") {
        annotators::HttpLlmOptions options;
        options.endpoint_url = endpoint;
        options.model = model;
        options.api_key = api_key;
        if (!cache_dir.empty()) {
            fs::create_directories(cache_dir);
            options.cache_dir = fs::path(cache_dir);
        }
        shaper::ShapingConfig cfg;
        cfg.source = shaper::ShapingSource::LiveBackend;
        cfg.live = annotators::make_http_annotator(std::move(options));
        shaping = cfg;
    } else {
        throw std::runtime_error("train: unknown arm '" + arm + "' (sparse|oracle|cached|live)");
    }

    std::string csv = "episode,return,steps,success,arm,seed\n";
    std::vector<int> first_success;
    std::vector<double> tail_rates;
    for (std::uint64_t seed : seeds) {
        shaper::LearningCurve curve = shaper::q_learn(layout, shaping, hp, seed);
        for (const auto& ep : curve.episodes) {
            csv += std::to_string(ep.episode) + ',' + std::to_string(ep.shaped_return) + ',' +
                   std::to_string(ep.steps) + ',' + (ep.success ? "1" : "0") + ',' + arm + ',' +
                   std::to_string(seed) + '\n';
        }
        first_success.push_back(curve.episodes_to_first_success());
        tail_rates.push_back(curve.success_rate_tail(100));
    }
    support::write_file_atomic(out, csv);

    std::sort(first_success.begin(), first_success.end());
    double tail_mean = tail_rates.empty()
                           ? 0.0
                           : std::accumulate(tail_rates.begin(), tail_rates.end(), 0.0) /
                                 static_cast<double>(tail_rates.size());
    info() << "arm " << arm << ": median episodes-to-first-success "
           << first_success[first_success.size() / 2] << ", mean tail-100 success rate "
           << tail_mean << " -> " << out << "\n";
    fs::path out_path(out);
    if (out_path.has_parent_path())
        write_config_snapshot(out_path.parent_path(), "train",
                              ordered_json{{"arm", arm},
                                           {"episodes", episodes},
                                           {"layout_seed", layout_seed},
                                           {"seeds", seeds}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KeyRoom subgoal-annotation harness"};
    app.require_subcommand(1);
    std::string config_file;
    app.add_option("--config-file", config_file, "flat key=value config file");
    std::string workspace;
    std::string log_level = "info";
    app.add_option("--workspace", workspace, "directory all relative paths resolve against");
    app.add_option("--log-level", log_level, "info|quiet")
        ->check(CLI::IsMember({"info", "quiet"}));

    // collect
    auto* collect = app.add_subcommand("collect", "collect a balanced transition dataset");
    std::uint64_t collect_seed = 7;
    int collect_size = 256;
    int collect_max_rollouts = 5000;
    std::string collect_out = "dataset.jsonl";
    collect->add_option("--seed", collect_seed, "master seed");
    collect->add_option("--size", collect_size, "dataset size");
    collect->add_option("--max-rollouts", collect_max_rollouts, "episode budget");
    collect->add_option("--out", collect_out, "output dataset path");

    // render
    auto* render = app.add_subcommand("render", "render an observation or dataset transition");
    std::string render_dataset;
    int render_index = 0;
    std::uint64_t render_seed = 0;
    std::string render_view = "cropped";
    bool render_nosep = false;
    render->add_option("--dataset", render_dataset, "dataset to render from");
    render->add_option("--index", render_index, "transition index within the dataset");
    render->add_option("--seed", render_seed, "layout seed for a fresh initial state");
    render->add_option("--view", render_view, "cropped|gamescreen")
        ->check(CLI::IsMember({"cropped", "gamescreen"}));
    render->add_flag("--no-separator", render_nosep, "drop inter-cell spaces");

    // prompt
    auto* prompt = app.add_subcommand("prompt", "compose prompts for dataset transitions");
    std::string prompt_dataset = "dataset.jsonl";
    std::string prompt_config = "cropped-provided";
    int prompt_limit = 0;
    std::string prompt_out;
    prompt->add_option("--dataset", prompt_dataset, "dataset path")->required();
    prompt->add_option("--config", prompt_config, "prompt configuration name");
    prompt->add_option("--limit", prompt_limit, "emit only the first N prompts");
    prompt->add_option("--out", prompt_out, "write JSONL here instead of stdout");

    // annotate
    auto* annotate = app.add_subcommand("annotate", "collect verdicts from a backend");
    AnnotateArgs annotate_args;
    annotate->add_option("--dataset", annotate_args.dataset, "dataset path");
    annotate->add_option("--layout-seed", annotate_args.layout_seed,
                         "annotate every reachable subgoal transition of this layout instead");
    annotate->add_option("--config", annotate_args.config_name, "prompt configuration name");
    annotate->add_option("--backend", annotate_args.backend, "oracle|http|mock|recorded");
    annotate->add_option("--out", annotate_args.out, "verdicts output path")->required();
    annotate->add_option("--endpoint", annotate_args.endpoint, "chat-completions endpoint url");
    annotate->add_option("--model", annotate_args.model, "model name");
    annotate->add_option("--api-key", annotate_args.api_key, "bearer token (never persisted)");
    annotate->add_option("--recorded-file", annotate_args.recorded_path,
                         "verdicts.jsonl for the recorded backend");
    annotate->add_option("--mock-script-dir", annotate_args.mock_script_dir,
                         "directory of raw response files for the mock backend");
    annotate->add_option("--cache-dir", annotate_args.cache_dir, "response cache directory");
    annotate->add_option("--request-template", annotate_args.request_template,
                         "JSON request template with {{prompt}}/{{model}} placeholders");
    annotate->add_option("--parallel", annotate_args.parallel, "max in-flight requests");
    annotate->add_option("--max-retries", annotate_args.max_retries, "HTTP retry budget");
    annotate->add_option("--timeout", annotate_args.timeout_seconds, "HTTP timeout seconds");
    annotate->add_option("--max-tokens", annotate_args.max_tokens, "completion token cap");

    // annotate-human
    auto* human = app.add_subcommand("annotate-human", "label prompts in a terminal loop");
    std::string human_dataset, human_out = "reference.jsonl", human_config = "cropped-provided";
    std::string human_id = "human";
    human->add_option("--dataset", human_dataset, "dataset path")->required();
    human->add_option("--config", human_config, "prompt configuration name");
    human->add_option("--out", human_out, "reference labels output path");
    human->add_option("--annotator-id", human_id, "recorded annotator id");

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "score verdicts against reference labels");
    std::vector<std::string> eval_verdicts;
    std::string eval_reference, eval_dataset, eval_policy = "lexicon", eval_out = "eval";
    evaluate->add_option("--verdicts", eval_verdicts, "verdict files (one row each)")->required();
    evaluate->add_option("--reference", eval_reference, "reference labels path");
    evaluate->add_option("--dataset", eval_dataset, "dataset path for ground-truth reference");
    evaluate->add_option("--policy", eval_policy, "lexicon|any-true")
        ->check(CLI::IsMember({"lexicon", "any-true"}));
    evaluate->add_option("--out-dir", eval_out, "report output directory");

    // ablate
    auto* ablate = app.add_subcommand("ablate", "per-annotator F1 deltas between two runs");
    std::string ablate_base, ablate_variant, ablate_out;
    ablate->add_option("--base", ablate_base, "baseline summary.json")->required();
    ablate->add_option("--variant", ablate_variant, "variant summary.json")->required();
    ablate->add_option("--out", ablate_out, "delta CSV path (stdout when omitted)");

    // train
    auto* train = app.add_subcommand("train", "tabular Q-learning with optional shaping");
    std::string train_arm = "oracle";
    int train_episodes = 500;
    std::vector<std::uint64_t> train_seeds = {0, 1, 2, 3, 4};
    std::uint64_t train_layout_seed = 0;
    std::string train_out = "curves.csv";
    std::string train_verdicts, train_endpoint, train_model, train_api_key, train_cache;
    train->add_option("--arm", train_arm, "sparse|oracle|cached|live");
    train->add_option("--episodes", train_episodes, "episodes per run");
    train->add_option("--seeds", train_seeds, "run seeds");
    train->add_option("--layout-seed", train_layout_seed, "layout seed");
    train->add_option("--out", train_out, "curve CSV path");
    train->add_option("--verdicts", train_verdicts, "verdicts.jsonl for the cached arm");
    train->add_option("--endpoint", train_endpoint, "endpoint for the live arm");
    train->add_option("--model", train_model, "model for the live arm");
    train->add_option("--api-key", train_api_key, "bearer token");
    train->add_option("--cache-dir", train_cache, "verdict cache for the live arm");

    LayeredArgs layered = layer_args(argc, argv);
    CLI11_PARSE(app, static_cast<int>(layered.argv.size()), layered.argv.data());

    try {
        g_quiet = log_level == "quiet";
        if (!workspace.empty()) {
            fs::create_directories(workspace);
            fs::current_path(workspace);
        }
        if (collect->parsed())
            return cmd_collect(collect_seed, collect_size, collect_max_rollouts, collect_out);
        if (render->parsed())
            return cmd_render(render_dataset, render_index, render_seed, render_view, render_nosep);
        if (prompt->parsed()) return cmd_prompt(prompt_dataset, prompt_config, prompt_limit, prompt_out);
        if (annotate->parsed()) return cmd_annotate(annotate_args);
        if (human->parsed()) return cmd_annotate_human(human_dataset, human_config, human_out, human_id);
        if (evaluate->parsed())
            return cmd_evaluate(eval_verdicts, eval_reference, eval_dataset, eval_policy, eval_out);
        if (ablate->parsed()) return cmd_ablate(ablate_base, ablate_variant, ablate_out);
        if (train->parsed())
            return cmd_train(train_arm, train_episodes, train_seeds, train_layout_seed, train_out,
                             train_verdicts, train_endpoint, train_model, train_api_key, train_cache);
    } catch (const std::exception& e) {
        ordered_json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
