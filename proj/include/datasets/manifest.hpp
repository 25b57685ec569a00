#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "annotators/lexicon.hpp"
#include "keyroom/search.hpp"
#include "keyroom/state.hpp"

namespace datasets {

inline constexpr const char* kDatasetSchema = "keyroom.dataset.v1";
inline constexpr const char* kGeneratorVersion = "1.0.0";

enum class CategoryLabel : std::uint8_t {
    KeyPickedUp = 0,
    DoorUnlocked = 1,
    None = 2,
};

inline constexpr int kCategoryCount = 3;

CategoryLabel category_of(keyroom::SubgoalEvent event);
std::string category_name(CategoryLabel c);
std::optional<CategoryLabel> category_from_name(const std::string& name);

struct CategoryCounts {
    int pickup = 0;
    int unlock = 0;
    int none = 0;

    int total() const { return pickup + unlock + none; }
    int max() const;
    int min() const;
    bool operator==(const CategoryCounts&) const = default;
};

struct DatasetManifest {
    std::vector<keyroom::Transition> transitions;
    std::uint64_t seed = 0;
    std::string created_at;  // stamped by the CLI; empty from the library
    std::string generator_version = kGeneratorVersion;
    int assisted_episodes = 0;
    std::string layout_policy = "per-episode";

    // Unknown fields survive load/save round trips.
    nlohmann::ordered_json header_extras = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> record_extras;

    CategoryCounts counts() const;
    const keyroom::Transition* find(const std::string& transition_id) const;
};

struct CollectOptions {
    keyroom::LayoutConfig layout_config;
    int episode_step_cap = 200;
    int max_rollouts = 5000;
};

// Harvests one-step transitions from random-policy episodes on fresh layouts
// (one layout seed per episode) into three reservoir-sampled category buckets
// (key pickup / door unlock / none). Episodes are assisted with a scripted
// key->door prefix while the unlock bucket is starved; the count of assisted
// episodes is recorded. Deterministic given the seed.
DatasetManifest collect_balanced(std::uint64_t seed, int size, const CollectOptions& options = {});

// Ground-truth canonical flags for a transition, derived from its event; the
// machine stand-in for the human reference.
annotators::CanonicalFlags ground_truth_flags(const keyroom::Transition& t);

struct LoadResult {
    DatasetManifest manifest;
    std::vector<std::string> warnings;
};

void save_manifest(const std::filesystem::path& path, const DatasetManifest& manifest);
LoadResult load_manifest(const std::filesystem::path& path);

// JSON codecs shared by the dataset file and other persisted records.
nlohmann::ordered_json layout_to_json(const keyroom::GridLayout& layout);
keyroom::GridLayout layout_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json state_to_json(const keyroom::GridState& state);
keyroom::GridState state_from_json(const nlohmann::ordered_json& j,
                                   std::shared_ptr<const keyroom::GridLayout> layout);

// Reference labels: one canonical-flag entry per transition.
struct ReferenceEntry {
    annotators::CanonicalFlags flags;
    std::string annotator_id;
    std::string note;
};

struct ReferenceLabels {
    std::vector<std::pair<std::string, ReferenceEntry>> entries;  // transition_id -> entry

    const ReferenceEntry* find(const std::string& transition_id) const;
    void upsert(const std::string& transition_id, ReferenceEntry entry);
};

ReferenceLabels ground_truth_reference(const DatasetManifest& manifest,
                                       const std::string& annotator_id = "ground-truth");
void save_reference(const std::filesystem::path& path, const ReferenceLabels& labels);
ReferenceLabels load_reference(const std::filesystem::path& path);

}  // namespace datasets
