#include "metrics/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "support/strings.hpp"

namespace metrics {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* kColumns[] = {"Annotator", "F1", "Accuracy", "Precision", "Recall",
                          "TP",        "TN", "FP",       "FN"};

std::vector<std::string> row_cells(const MetricsRow& row) {
    return {row.annotator_name,
            format_metric(row.f1),
            format_metric(row.accuracy),
            format_metric(row.precision),
            format_metric(row.recall),
            std::to_string(row.counts.tp),
            std::to_string(row.counts.tn),
            std::to_string(row.counts.fp),
            std::to_string(row.counts.fn)};
}

std::vector<std::string> random_cells() {
    std::string v = format_metric(kRandomBaseline);
    return {"Random", v, v, v, v, "", "", "", ""};
}

std::string csv_escape(const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> csv_split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

void sort_rows(std::vector<MetricsRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const MetricsRow& a, const MetricsRow& b) {
        if (a.f1 != b.f1) return a.f1 > b.f1;
        if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
        return a.annotator_name < b.annotator_name;
    });
}

}  // namespace

Report report(std::vector<MetricsRow> rows, PositivePolicy policy,
              int unparseable_prediction_negatives) {
    sort_rows(rows);

    std::vector<std::vector<std::string>> table;
    table.emplace_back(std::begin(kColumns), std::end(kColumns));
    for (const auto& row : rows) table.push_back(row_cells(row));
    table.push_back(random_cells());

    std::vector<size_t> widths(table[0].size(), 0);
    for (const auto& cells : table)
        for (size_t c = 0; c < cells.size(); ++c) widths[c] = std::max(widths[c], cells[c].size());

    std::string text;
    for (size_t r = 0; r < table.size(); ++r) {
        std::string line;
        for (size_t c = 0; c < table[r].size(); ++c) {
            std::string cell = table[r][c];
            if (c == 0) {
                cell.resize(widths[c], ' ');  // left-align names
            } else {
                cell.insert(0, widths[c] - cell.size(), ' ');
            }
            line += cell;
            if (c + 1 < table[r].size()) line += "  ";
        }
        text += support::rstrip(line);
        text += '\n';
    }

    std::string csv = "annotator,f1,accuracy,precision,recall,tp,tn,fp,fn\n";
    for (size_t r = 1; r < table.size(); ++r) {
        for (size_t c = 0; c < table[r].size(); ++c) {
            csv += csv_escape(table[r][c]);
            if (c + 1 < table[r].size()) csv += ',';
        }
        csv += '\n';
    }

    ordered_json j;
    j["policy"] = positive_policy_name(policy);
    j["unparseable_prediction_negatives"] = unparseable_prediction_negatives;
    j["random_baseline"] = kRandomBaseline;
    j["rows"] = ordered_json::array();
    for (const auto& row : rows) {
        j["rows"].push_back(ordered_json{
            {"annotator", row.annotator_name},
            {"config", row.config_name},
            {"f1", row.f1},
            {"accuracy", row.accuracy},
            {"precision", row.precision},
            {"recall", row.recall},
            {"tp", row.counts.tp},
            {"tn", row.counts.tn},
            {"fp", row.counts.fp},
            {"fn", row.counts.fn},
        });
    }

    Report out;
    out.rows = std::move(rows);
    out.table_text = std::move(text);
    out.csv = std::move(csv);
    out.summary_json = j.dump(2) + "\n";
    return out;
}

std::vector<MetricsRow> parse_report_csv(const std::string& csv) {
    std::vector<MetricsRow> rows;
    auto lines = support::split_lines(csv);
    for (size_t i = 1; i < lines.size(); ++i) {
        if (support::trim_view(lines[i]).empty()) continue;
        auto fields = csv_split_line(lines[i]);
        if (fields.size() != 9)
            throw std::runtime_error("report csv: expected 9 fields per row");
        if (fields[0] == "Random") continue;
        MetricsRow row;
        row.annotator_name = fields[0];
        row.f1 = std::stod(fields[1]);
        row.accuracy = std::stod(fields[2]);
        row.precision = std::stod(fields[3]);
        row.recall = std::stod(fields[4]);
        row.counts = {std::stoi(fields[5]), std::stoi(fields[6]), std::stoi(fields[7]),
                      std::stoi(fields[8])};
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<AblationDelta> ablation_delta(const std::vector<MetricsRow>& baseline_rows,
                                          const std::vector<MetricsRow>& variant_rows) {
    auto find = [](const std::vector<MetricsRow>& rows, const std::string& name) -> const MetricsRow* {
        for (const auto& row : rows)
            if (row.annotator_name == name) return &row;
        return nullptr;
    };
    std::string mismatch;
    for (const auto& row : baseline_rows)
        if (!find(variant_rows, row.annotator_name))
            mismatch += (mismatch.empty() ? "" : ",") + row.annotator_name;
    for (const auto& row : variant_rows)
        if (!find(baseline_rows, row.annotator_name))
            mismatch += (mismatch.empty() ? "" : ",") + row.annotator_name;
    if (!mismatch.empty())
        throw std::runtime_error("ablation: annotator sets differ: " + mismatch);

    std::vector<AblationDelta> deltas;
    for (const auto& base : baseline_rows) {
        const MetricsRow* variant = find(variant_rows, base.annotator_name);
        AblationDelta d;
        d.annotator_name = base.annotator_name;
        d.base_config = base.config_name;
        d.variant_config = variant->config_name;
        d.f1_base = display_round(base.f1);
        d.f1_variant = display_round(variant->f1);
        d.delta = display_round(d.f1_variant - d.f1_base);
        deltas.push_back(std::move(d));
    }
    return deltas;
}

std::string ablation_csv(const std::vector<AblationDelta>& deltas) {
    // column name records the sign convention: positive = variant improved
    std::string out = "annotator,base_config,variant_config,f1_base,f1_variant,delta_f1_variant_minus_base\n";
    for (const auto& d : deltas) {
        out += csv_escape(d.annotator_name) + ',' + csv_escape(d.base_config) + ',' +
               csv_escape(d.variant_config) + ',' + format_metric(d.f1_base) + ',' +
               format_metric(d.f1_variant) + ',' + format_metric(d.delta) + '\n';
    }
    return out;
}

}  // namespace metrics
