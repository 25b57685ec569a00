#include "datasets/manifest.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "support/files.hpp"
#include "support/rng.hpp"
#include "textview/render.hpp"

namespace datasets {

using keyroom::GridLayout;
using keyroom::GridState;
using keyroom::SubgoalEvent;
using keyroom::Transition;
using ordered_json = nlohmann::ordered_json;

CategoryLabel category_of(SubgoalEvent event) {
    switch (event) {
        case SubgoalEvent::KeyPickedUp: return CategoryLabel::KeyPickedUp;
        case SubgoalEvent::DoorUnlocked: return CategoryLabel::DoorUnlocked;
        case SubgoalEvent::None: return CategoryLabel::None;
    }
    return CategoryLabel::None;
}

std::string category_name(CategoryLabel c) {
    switch (c) {
        case CategoryLabel::KeyPickedUp: return "pickup";
        case CategoryLabel::DoorUnlocked: return "unlock";
        case CategoryLabel::None: return "none";
    }
    return "none";
}

std::optional<CategoryLabel> category_from_name(const std::string& name) {
    if (name == "pickup") return CategoryLabel::KeyPickedUp;
    if (name == "unlock") return CategoryLabel::DoorUnlocked;
    if (name == "none") return CategoryLabel::None;
    return std::nullopt;
}

int CategoryCounts::max() const { return std::max({pickup, unlock, none}); }
int CategoryCounts::min() const { return std::min({pickup, unlock, none}); }

CategoryCounts DatasetManifest::counts() const {
    CategoryCounts c;
    for (const auto& t : transitions) {
        switch (category_of(t.event)) {
            case CategoryLabel::KeyPickedUp: ++c.pickup; break;
            case CategoryLabel::DoorUnlocked: ++c.unlock; break;
            case CategoryLabel::None: ++c.none; break;
        }
    }
    return c;
}

const Transition* DatasetManifest::find(const std::string& transition_id) const {
    for (const auto& t : transitions)
        if (t.id == transition_id) return &t;
    return nullptr;
}

annotators::CanonicalFlags ground_truth_flags(const Transition& t) {
    return {t.event == SubgoalEvent::KeyPickedUp, t.event == SubgoalEvent::DoorUnlocked};
}

namespace {

struct Bucket {
    int target = 0;
    std::uint64_t seen = 0;  // distinct candidates offered
    std::vector<Transition> items;
    support::SplitMix64 rng;

    explicit Bucket(std::uint64_t rng_seed) : rng(rng_seed) {}

    void offer(const Transition& t) {
        ++seen;
        if (static_cast<int>(items.size()) < target) {
            items.push_back(t);
            return;
        }
        // classic reservoir step, keeps the kept set uniform over the stream
        std::uint64_t j = rng.next_below(seen);
        if (j < static_cast<std::uint64_t>(target)) items[static_cast<size_t>(j)] = t;
    }

    bool full() const { return static_cast<int>(items.size()) >= target; }
};

}  // namespace

DatasetManifest collect_balanced(std::uint64_t seed, int size, const CollectOptions& options) {
    if (size < kCategoryCount)
        throw std::runtime_error("collect: size must be at least " + std::to_string(kCategoryCount));

    // remainder goes to the positive categories first, so size=256 splits
    // 86/85/85 (171 positives, 85 negatives)
    const int base = size / kCategoryCount;
    const int remainder = size % kCategoryCount;
    std::vector<Bucket> buckets;
    for (int c = 0; c < kCategoryCount; ++c) {
        buckets.emplace_back(support::derive_seed(seed, 0xb0c0 + static_cast<std::uint64_t>(c)));
        buckets.back().target = base + (c < remainder ? 1 : 0);
    }

    std::unordered_set<std::string> seen_ids;
    DatasetManifest manifest;
    manifest.seed = seed;

    int episodes = 0;
    for (; episodes < options.max_rollouts; ++episodes) {
        bool all_full = true;
        for (const auto& b : buckets) all_full = all_full && b.full();
        if (all_full) break;

        auto layout = std::make_shared<const GridLayout>(
            keyroom::generate_layout(support::derive_seed(seed, 0xe0000 + static_cast<std::uint64_t>(episodes)),
                                     options.layout_config));
        GridState state = keyroom::initial_state(layout);

        // assist while the unlock bucket has not yet seen enough candidates
        std::vector<keyroom::Action> script;
        Bucket& unlock_bucket = buckets[static_cast<size_t>(CategoryLabel::DoorUnlocked)];
        if (unlock_bucket.seen < static_cast<std::uint64_t>(unlock_bucket.target)) {
            if (auto prefix = keyroom::scripted_key_door_prefix(state)) {
                script = std::move(*prefix);
                ++manifest.assisted_episodes;
            }
        }

        support::SplitMix64 action_rng(
            support::derive_seed(seed, 0xf0000 + static_cast<std::uint64_t>(episodes)));
        for (int i = 0; i < options.episode_step_cap && !state.terminated; ++i) {
            keyroom::Action action =
                static_cast<size_t>(i) < script.size()
                    ? script[static_cast<size_t>(i)]
                    : keyroom::kAllActions[action_rng.next_below(keyroom::kAllActions.size())];
            Transition t = keyroom::make_transition(state, action);
            state = t.after;
            if (!seen_ids.insert(t.id).second) continue;
            buckets[static_cast<size_t>(category_of(t.event))].offer(t);
        }
    }

    for (int c = 0; c < kCategoryCount; ++c) {
        Bucket& b = buckets[static_cast<size_t>(c)];
        if (!b.full())
            throw std::runtime_error(
                "collect: exhausted " + std::to_string(episodes) + " rollouts with category '" +
                category_name(static_cast<CategoryLabel>(c)) + "' at " +
                std::to_string(b.items.size()) + "/" + std::to_string(b.target) +
                " (raise --max-rollouts)");
        manifest.transitions.insert(manifest.transitions.end(), b.items.begin(), b.items.end());
    }
    manifest.record_extras.assign(manifest.transitions.size(), ordered_json::object());
    return manifest;
}

// ---- JSON codecs ----

namespace {

ordered_json coord_json(const keyroom::Coord& c) { return ordered_json::array({c.row, c.col}); }

keyroom::Coord coord_from(const ordered_json& j) {
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

std::string event_name(SubgoalEvent e) {
    switch (e) {
        case SubgoalEvent::KeyPickedUp: return "key_picked_up";
        case SubgoalEvent::DoorUnlocked: return "door_unlocked";
        case SubgoalEvent::None: return "none";
    }
    return "none";
}

SubgoalEvent event_from(const std::string& name) {
    if (name == "key_picked_up") return SubgoalEvent::KeyPickedUp;
    if (name == "door_unlocked") return SubgoalEvent::DoorUnlocked;
    if (name == "none") return SubgoalEvent::None;
    throw std::runtime_error("dataset: unknown event name '" + name + "'");
}

}  // namespace

ordered_json layout_to_json(const GridLayout& layout) {
    ordered_json j;
    j["width"] = layout.width;
    j["height"] = layout.height;
    j["cells"] = layout.cell_rows();
    j["door"] = layout.door_pos ? coord_json(*layout.door_pos) : ordered_json(nullptr);
    j["key_spawn"] = layout.key_spawn ? coord_json(*layout.key_spawn) : ordered_json(nullptr);
    j["goal"] = layout.goal_pos ? coord_json(*layout.goal_pos) : ordered_json(nullptr);
    j["agent_spawn"] = layout.agent_spawn ? coord_json(*layout.agent_spawn) : ordered_json(nullptr);
    j["seed"] = layout.seed;
    return j;
}

GridLayout layout_from_json(const ordered_json& j) {
    GridLayout layout;
    layout.width = j.at("width").get<int>();
    layout.height = j.at("height").get<int>();
    layout.seed = j.value("seed", static_cast<std::uint64_t>(0));
    const auto& rows = j.at("cells");
    if (static_cast<int>(rows.size()) != layout.height)
        throw std::runtime_error("dataset: layout row count mismatch");
    layout.cells.assign(static_cast<size_t>(layout.width) * layout.height, keyroom::CellKind::Void);
    for (int r = 0; r < layout.height; ++r) {
        std::string row = rows.at(static_cast<size_t>(r)).get<std::string>();
        if (static_cast<int>(row.size()) != layout.width)
            throw std::runtime_error("dataset: layout row width mismatch");
        for (int c = 0; c < layout.width; ++c) {
            auto kind = keyroom::cell_from_glyph(row[static_cast<size_t>(c)]);
            if (!kind) throw std::runtime_error("dataset: unknown cell glyph in layout");
            layout.set({r, c}, *kind);
        }
    }
    auto opt_coord = [&](const char* key) -> std::optional<keyroom::Coord> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return coord_from(j.at(key));
    };
    layout.door_pos = opt_coord("door");
    layout.key_spawn = opt_coord("key_spawn");
    layout.goal_pos = opt_coord("goal");
    layout.agent_spawn = opt_coord("agent_spawn");
    return layout;
}

ordered_json state_to_json(const GridState& state) {
    ordered_json j;
    j["agent"] = coord_json(state.agent_pos);
    j["key_on_floor"] = state.key_on_floor ? coord_json(*state.key_on_floor) : ordered_json(nullptr);
    j["key_held"] = state.key_held;
    j["door_locked"] = state.door_locked;
    j["message"] = state.last_message;
    j["step_count"] = state.step_count;
    j["terminated"] = state.terminated;
    return j;
}

GridState state_from_json(const ordered_json& j, std::shared_ptr<const GridLayout> layout) {
    GridState s;
    s.layout = std::move(layout);
    s.agent_pos = coord_from(j.at("agent"));
    if (!j.at("key_on_floor").is_null()) s.key_on_floor = coord_from(j.at("key_on_floor"));
    s.key_held = j.at("key_held").get<bool>();
    s.door_locked = j.at("door_locked").get<bool>();
    s.last_message = j.at("message").get<std::string>();
    s.step_count = j.at("step_count").get<int>();
    s.terminated = j.at("terminated").get<bool>();
    return s;
}

namespace {

ordered_json transition_to_json(const Transition& t, const ordered_json& extras) {
    ordered_json j;
    j["id"] = t.id;
    j["category"] = category_name(category_of(t.event));
    j["action"] = ordered_json{{"id", static_cast<int>(t.action)},
                               {"name", keyroom::action_name(t.action)}};
    j["task_reward"] = t.task_reward;
    j["event"] = event_name(t.event);
    j["layout"] = layout_to_json(*t.before.layout);
    j["before"] = state_to_json(t.before);
    j["after"] = state_to_json(t.after);
    j["gamescreen"] =
        textview::render_transition(t, textview::ViewKind::GameScreen, true, false);
    for (auto it = extras.begin(); it != extras.end(); ++it) {
        if (!j.contains(it.key())) j[it.key()] = it.value();
    }
    return j;
}

const std::unordered_set<std::string>& known_record_keys() {
    static const std::unordered_set<std::string> keys{
        "id", "category", "action", "task_reward", "event", "layout", "before", "after",
        "gamescreen"};
    return keys;
}

const std::unordered_set<std::string>& known_header_keys() {
    static const std::unordered_set<std::string> keys{
        "schema", "generator_version", "seed",           "size",
        "counts", "assisted_episodes", "layout_policy", "created_at"};
    return keys;
}

}  // namespace

void save_manifest(const std::filesystem::path& path, const DatasetManifest& manifest) {
    CategoryCounts counts = manifest.counts();
    ordered_json header;
    header["schema"] = kDatasetSchema;
    header["generator_version"] = manifest.generator_version;
    header["seed"] = manifest.seed;
    header["size"] = manifest.transitions.size();
    header["counts"] = ordered_json{
        {"pickup", counts.pickup}, {"unlock", counts.unlock}, {"none", counts.none}};
    header["assisted_episodes"] = manifest.assisted_episodes;
    header["layout_policy"] = manifest.layout_policy;
    header["created_at"] = manifest.created_at;
    for (auto it = manifest.header_extras.begin(); it != manifest.header_extras.end(); ++it) {
        if (!header.contains(it.key())) header[it.key()] = it.value();
    }

    std::string out = header.dump();
    out += '\n';
    for (size_t i = 0; i < manifest.transitions.size(); ++i) {
        const ordered_json extras = i < manifest.record_extras.size()
                                        ? manifest.record_extras[i]
                                        : ordered_json::object();
        out += transition_to_json(manifest.transitions[i], extras).dump();
        out += '\n';
    }
    support::write_file_atomic(path, out);
}

LoadResult load_manifest(const std::filesystem::path& path) {
    auto lines = support::read_jsonl_lines(path);
    if (lines.empty()) throw std::runtime_error("dataset: empty file " + path.string());

    LoadResult result;
    auto parse_line = [&](const support::JsonlLine& line) {
        try {
            return ordered_json::parse(line.text);
        } catch (const std::exception& e) {
            throw std::runtime_error("dataset: parse error at byte " +
                                     std::to_string(line.byte_offset) + " of " + path.string() +
                                     ": " + e.what());
        }
    };

    ordered_json header = parse_line(lines[0]);
    std::string schema = header.value("schema", "");
    if (schema != kDatasetSchema)
        throw std::runtime_error("dataset: schema mismatch in " + path.string() + ": expected '" +
                                 kDatasetSchema + "', found '" + schema + "'");
    DatasetManifest& manifest = result.manifest;
    manifest.seed = header.value("seed", static_cast<std::uint64_t>(0));
    manifest.generator_version = header.value("generator_version", "");
    manifest.assisted_episodes = header.value("assisted_episodes", 0);
    manifest.layout_policy = header.value("layout_policy", "");
    manifest.created_at = header.value("created_at", "");
    if (manifest.generator_version != kGeneratorVersion)
        result.warnings.push_back("dataset written by generator_version " +
                                  manifest.generator_version + ", loading with " +
                                  kGeneratorVersion);
    for (auto it = header.begin(); it != header.end(); ++it) {
        if (!known_header_keys().count(it.key())) manifest.header_extras[it.key()] = it.value();
    }

    const std::size_t declared = header.value("size", static_cast<std::size_t>(0));
    for (size_t i = 1; i < lines.size(); ++i) {
        ordered_json j = parse_line(lines[i]);
        Transition t;
        auto layout = std::make_shared<const GridLayout>(layout_from_json(j.at("layout")));
        t.before = state_from_json(j.at("before"), layout);
        t.after = state_from_json(j.at("after"), layout);
        auto action = keyroom::action_from_id(j.at("action").at("id").get<int>());
        if (!action)
            throw std::runtime_error("dataset: bad action id at byte " +
                                     std::to_string(lines[i].byte_offset));
        t.action = *action;
        t.task_reward = j.at("task_reward").get<int>();
        t.event = event_from(j.at("event").get<std::string>());
        t.id = j.at("id").get<std::string>();

        // label soundness: stored event and id must match the snapshots
        if (keyroom::detect_event(t.before, t.after) != t.event)
            throw std::runtime_error("dataset: stored event disagrees with snapshots at byte " +
                                     std::to_string(lines[i].byte_offset) + " of " + path.string());
        if (keyroom::transition_id(t.before, t.action) != t.id)
            throw std::runtime_error("dataset: stored id disagrees with snapshots at byte " +
                                     std::to_string(lines[i].byte_offset) + " of " + path.string());

        ordered_json extras = ordered_json::object();
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!known_record_keys().count(it.key())) extras[it.key()] = it.value();
        }
        manifest.record_extras.push_back(std::move(extras));
        manifest.transitions.push_back(std::move(t));
    }
    if (declared != 0 && declared != manifest.transitions.size())
        throw std::runtime_error("dataset: header declares " + std::to_string(declared) +
                                 " transitions but file holds " +
                                 std::to_string(manifest.transitions.size()) + " (" +
                                 path.string() + " may be truncated at byte " +
                                 std::to_string(lines.back().byte_offset) + ")");
    return result;
}

// ---- reference labels ----

const ReferenceEntry* ReferenceLabels::find(const std::string& transition_id) const {
    for (const auto& [id, entry] : entries)
        if (id == transition_id) return &entry;
    return nullptr;
}

void ReferenceLabels::upsert(const std::string& transition_id, ReferenceEntry entry) {
    for (auto& [id, existing] : entries) {
        if (id == transition_id) {
            existing = std::move(entry);
            return;
        }
    }
    entries.emplace_back(transition_id, std::move(entry));
}

ReferenceLabels ground_truth_reference(const DatasetManifest& manifest,
                                       const std::string& annotator_id) {
    ReferenceLabels labels;
    for (const auto& t : manifest.transitions)
        labels.entries.emplace_back(t.id, ReferenceEntry{ground_truth_flags(t), annotator_id, ""});
    return labels;
}

void save_reference(const std::filesystem::path& path, const ReferenceLabels& labels) {
    std::string out;
    for (const auto& [id, entry] : labels.entries) {
        ordered_json j;
        j["transition_id"] = id;
        j["flags"] = ordered_json{{keyroom::kPickupSubgoal, entry.flags.pickup},
                                  {keyroom::kUnlockSubgoal, entry.flags.unlock}};
        j["annotator_id"] = entry.annotator_id;
        j["note"] = entry.note;
        out += j.dump();
        out += '\n';
    }
    support::write_file_atomic(path, out);
}

ReferenceLabels load_reference(const std::filesystem::path& path) {
    ReferenceLabels labels;
    for (const auto& line : support::read_jsonl_lines(path)) {
        ordered_json j;
        try {
            j = ordered_json::parse(line.text);
        } catch (const std::exception& e) {
            throw std::runtime_error("reference: parse error at byte " +
                                     std::to_string(line.byte_offset) + " of " + path.string() +
                                     ": " + e.what());
        }
        ReferenceEntry entry;
        entry.flags.pickup = j.at("flags").value(keyroom::kPickupSubgoal, false);
        entry.flags.unlock = j.at("flags").value(keyroom::kUnlockSubgoal, false);
        entry.annotator_id = j.value("annotator_id", "");
        entry.note = j.value("note", "");
        labels.upsert(j.at("transition_id").get<std::string>(), std::move(entry));
    }
    return labels;
}

}  // namespace datasets
