#pragma once

#include <vector>

namespace testsupport {

// One benchmark row: confusion counts with the published four metrics.
struct TableRow {
    const char* table;      // which result table the row came from
    const char* annotator;
    int tp, tn, fp, fn;
    double f1, accuracy, precision, recall;
};

// Transcribed result rows: the four headline tables plus the eight ablation
// tables (token separator x4, action inclusion x4).
const std::vector<TableRow>& benchmark_rows();

}  // namespace testsupport
