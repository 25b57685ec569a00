#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "metrics/confusion.hpp"

namespace metrics {

// The printed 0.33 baseline is the 1/3 constant of the 3-category design,
// not a simulated policy.
inline constexpr double kRandomBaseline = 1.0 / 3.0;

struct Report {
    std::vector<MetricsRow> rows;  // sorted: F1 desc, accuracy desc, name asc
    std::string table_text;       // aligned plain-text table with the Random row
    std::string csv;              // RFC-4180
    std::string summary_json;     // machine-readable, full precision
};

// Sorts rows, appends the Random baseline row, renders all three outputs.
Report report(std::vector<MetricsRow> rows, PositivePolicy policy,
              int unparseable_prediction_negatives = 0);

// Re-parses a report CSV back into rows (Random baseline row excluded).
std::vector<MetricsRow> parse_report_csv(const std::string& csv);

struct AblationDelta {
    std::string annotator_name;
    std::string base_config;
    std::string variant_config;
    double f1_base = 0.0;     // display-rounded
    double f1_variant = 0.0;  // display-rounded
    double delta = 0.0;       // f1_variant - f1_base, on the rounded values
};

// Per-annotator F1 deltas between a baseline and a variant run. Deltas are
// computed on display-rounded values (differences of the printed numbers);
// the CSV column name records the sign convention. Throws when the two row
// sets name different annotators.
std::vector<AblationDelta> ablation_delta(const std::vector<MetricsRow>& baseline_rows,
                                          const std::vector<MetricsRow>& variant_rows);

std::string ablation_csv(const std::vector<AblationDelta>& deltas);

}  // namespace metrics
