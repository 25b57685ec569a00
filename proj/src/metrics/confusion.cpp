#include "metrics/confusion.hpp"

#include <cfenv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

namespace metrics {

std::string positive_policy_name(PositivePolicy p) {
    return p == PositivePolicy::LexiconFiltered ? "lexicon" : "any-true";
}

ScoreResult score(const std::vector<annotators::VerdictRecord>& verdicts,
                  const datasets::ReferenceLabels& reference, PositivePolicy policy) {
    std::unordered_set<std::string> verdict_ids;
    for (const auto& v : verdicts) {
        if (!verdict_ids.insert(v.transition_id).second)
            throw std::runtime_error("score: duplicate verdict for transition " + v.transition_id);
    }
    std::unordered_set<std::string> reference_ids;
    for (const auto& [id, entry] : reference.entries) reference_ids.insert(id);

    std::string missing, extra;
    for (const auto& [id, entry] : reference.entries) {
        if (!verdict_ids.count(id)) missing += (missing.empty() ? "" : ",") + id;
    }
    for (const auto& v : verdicts) {
        if (!reference_ids.count(v.transition_id))
            extra += (extra.empty() ? "" : ",") + v.transition_id;
    }
    if (!missing.empty() || !extra.empty())
        throw std::runtime_error("score: verdicts and reference cover different transitions"
                                 "; missing=[" + missing + "] extra=[" + extra + "]");

    ScoreResult result;
    for (const auto& v : verdicts) {
        const datasets::ReferenceEntry* ref = reference.find(v.transition_id);
        bool ref_positive = ref->flags.any();
        bool pred_positive = false;
        if (v.parse_status == annotators::ParseStatus::Unparseable) {
            ++result.unparseable;
        } else if (policy == PositivePolicy::LexiconFiltered) {
            pred_positive = v.matched.any();
        } else {
            for (const auto& [name, flag] : v.flags) pred_positive = pred_positive || flag;
        }
        if (ref_positive && pred_positive) ++result.counts.tp;
        else if (ref_positive && !pred_positive) ++result.counts.fn;
        else if (!ref_positive && pred_positive) ++result.counts.fp;
        else ++result.counts.tn;
    }
    return result;
}

MetricsRow derive(const ConfusionCounts& counts, std::string annotator_name,
                  std::string config_name) {
    MetricsRow row;
    row.annotator_name = std::move(annotator_name);
    row.config_name = std::move(config_name);
    row.counts = counts;
    const double tp = counts.tp, fp = counts.fp, fn = counts.fn;
    row.precision = (counts.tp + counts.fp) > 0 ? tp / (tp + fp) : 0.0;
    row.recall = (counts.tp + counts.fn) > 0 ? tp / (tp + fn) : 0.0;
    row.f1 = (row.precision + row.recall) > 0.0
                 ? 2.0 * row.precision * row.recall / (row.precision + row.recall)
                 : 0.0;
    row.accuracy = counts.total() > 0
                       ? static_cast<double>(counts.tp + counts.tn) / counts.total()
                       : 0.0;
    return row;
}

double display_round(double value) {
    // nearbyint under the default FE_TONEAREST mode rounds half to even
    return std::nearbyint(value * 100.0) / 100.0;
}

std::string format_metric(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", display_round(value));
    return buf;
}

}  // namespace metrics
