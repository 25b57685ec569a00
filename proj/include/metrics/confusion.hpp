#pragma once

#include <string>
#include <vector>

#include "annotators/verdict_io.hpp"
#include "datasets/manifest.hpp"

namespace metrics {

struct ConfusionCounts {
    int tp = 0;
    int tn = 0;
    int fp = 0;
    int fn = 0;

    int total() const { return tp + tn + fp + fn; }
    bool operator==(const ConfusionCounts&) const = default;
};

struct MetricsRow {
    std::string annotator_name;
    std::string config_name;
    double f1 = 0.0;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    ConfusionCounts counts;
};

// How a verdict counts as prediction-positive.
enum class PositivePolicy : std::uint8_t {
    LexiconFiltered,  // some lexicon-matched canonical flag is true
    AnyTrue,          // some reported subgoal flag is true
};

std::string positive_policy_name(PositivePolicy p);

struct ScoreResult {
    ConfusionCounts counts;
    int unparseable = 0;  // verdicts counted as prediction-negative due to parse failure
};

// Binary per-transition classification: reference-positive iff any canonical
// flag is true; prediction-positive per policy; Unparseable verdicts count as
// prediction-negative. Throws when the verdict and reference transition-id
// sets differ (the error lists missing/extra ids).
ScoreResult score(const std::vector<annotators::VerdictRecord>& verdicts,
                  const datasets::ReferenceLabels& reference, PositivePolicy policy);

// Precision/recall/F1/accuracy from counts, zero-division mapped to 0.
// Values are kept at full precision; rounding happens only at display.
MetricsRow derive(const ConfusionCounts& counts, std::string annotator_name = "",
                  std::string config_name = "");

// Half-even rounding to 2 decimals, applied at display time only.
double display_round(double value);
std::string format_metric(double value);

}  // namespace metrics
