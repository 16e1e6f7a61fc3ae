#include "evicast/evaluation.hpp"

#include <algorithm>
#include <set>

#include "evicast/errors.hpp"

namespace evicast {

Outcome outcome_of(const Score& s) {
    if (s.home > s.away) return Outcome::HomeWin;
    if (s.home == s.away) return Outcome::Draw;
    return Outcome::AwayWin;
}

int score_prediction(const Score& pred, const Score& actual, Schema schema) {
    const bool exact = pred == actual;
    const bool outcome = outcome_of(pred) == outcome_of(actual);
    switch (schema) {
        case Schema::ResultOnly: return exact ? 1 : 0;
        case Schema::OutcomeOnly: return outcome ? 1 : 0;
        case Schema::ResultAndOutcome: return exact ? 2 : (outcome ? 1 : 0);
    }
    return 0;
}

std::string to_string(const SourceId& id) {
    switch (id.kind) {
        case PredictionKind::Intuitive: return "intuitive:" + id.expert;
        case PredictionKind::Evidence: return "evidence:" + id.expert;
        case PredictionKind::Combined: return "combined";
    }
    return {};
}

double SourceTally::ratio_sr() const {
    return matches == 0 ? 0.0 : static_cast<double>(sum_sr) / matches;
}

double SourceTally::ratio_so() const {
    return matches == 0 ? 0.0 : static_cast<double>(sum_so) / matches;
}

double SourceTally::ratio_sro() const {
    return matches == 0 ? 0.0 : static_cast<double>(sum_sro) / (2.0 * matches);
}

SourceTally SourceTally::from_counts(SourceId source, int correct_results,
                                     int correct_outcomes, int matches) {
    SourceTally t;
    t.source = std::move(source);
    t.matches = matches;
    t.correct_results = correct_results;
    t.correct_outcomes = correct_outcomes;
    t.sum_sr = correct_results;
    t.sum_so = correct_results + correct_outcomes;
    t.sum_sro = 2 * correct_results + correct_outcomes;
    return t;
}

ColumnStats stats_over(const std::vector<SourceTally>& tallies) {
    ColumnStats s;
    if (tallies.empty()) return s;
    const double n = static_cast<double>(tallies.size());
    for (const auto& t : tallies) {
        s.mean_correct_results += t.correct_results;
        s.mean_correct_outcomes += t.correct_outcomes;
        s.mean_sum_sr += t.sum_sr;
        s.mean_sum_so += t.sum_so;
        s.mean_sum_sro += t.sum_sro;
        s.mean_ratio_sr += t.ratio_sr();
        s.mean_ratio_so += t.ratio_so();
        s.mean_ratio_sro += t.ratio_sro();

        s.max_correct_results = std::max(s.max_correct_results, t.correct_results);
        s.max_correct_outcomes = std::max(s.max_correct_outcomes, t.correct_outcomes);
        s.max_sum_sr = std::max(s.max_sum_sr, t.sum_sr);
        s.max_sum_so = std::max(s.max_sum_so, t.sum_so);
        s.max_sum_sro = std::max(s.max_sum_sro, t.sum_sro);
        s.max_ratio_sr = std::max(s.max_ratio_sr, t.ratio_sr());
        s.max_ratio_so = std::max(s.max_ratio_so, t.ratio_so());
        s.max_ratio_sro = std::max(s.max_ratio_sro, t.ratio_sro());
    }
    s.mean_correct_results /= n;
    s.mean_correct_outcomes /= n;
    s.mean_sum_sr /= n;
    s.mean_sum_so /= n;
    s.mean_sum_sro /= n;
    s.mean_ratio_sr /= n;
    s.mean_ratio_so /= n;
    s.mean_ratio_sro /= n;
    return s;
}

std::vector<SourceTally> EvaluationReport::sources_of(PredictionKind kind) const {
    std::vector<SourceTally> out;
    for (const auto& t : sources)
        if (t.source.kind == kind) out.push_back(t);
    return out;
}

EvaluationReport aggregate(const std::vector<MatchRecord>& records) {
    std::map<SourceId, SourceTally> tallies;
    std::optional<std::set<SourceId>> expected;

    for (const auto& rec : records) {
        if (!rec.actual)
            throw EvaluationError("match '" + rec.match_id + "' has no actual result");
        if (rec.predictions.empty())
            throw EvaluationError("match '" + rec.match_id + "' has no predictions");

        std::set<SourceId> sources;
        for (const auto& [src, pred] : rec.predictions) sources.insert(src);
        if (!expected) {
            expected = sources;
        } else if (*expected != sources) {
            // Ratios share a single n; a source present for only part of the
            // matches would silently skew it.
            throw EvaluationError("match '" + rec.match_id +
                                  "' has a different prediction-source set than the "
                                  "preceding matches");
        }

        for (const auto& [src, pred] : rec.predictions) {
            auto& t = tallies[src];
            t.source = src;
            t.matches += 1;
            const bool exact = pred == *rec.actual;
            const bool outcome = outcome_of(pred) == outcome_of(*rec.actual);
            if (exact)
                t.correct_results += 1;
            else if (outcome)
                t.correct_outcomes += 1;
            t.sum_sr += score_prediction(pred, *rec.actual, Schema::ResultOnly);
            t.sum_so += score_prediction(pred, *rec.actual, Schema::OutcomeOnly);
            t.sum_sro += score_prediction(pred, *rec.actual, Schema::ResultAndOutcome);
        }
    }

    EvaluationReport report;
    report.matches_evaluated = static_cast<int>(records.size());
    for (auto& [src, tally] : tallies) report.sources.push_back(std::move(tally));

    for (const auto kind : {PredictionKind::Intuitive, PredictionKind::Evidence}) {
        const auto rows = report.sources_of(kind);
        if (!rows.empty()) report.expert_stats.emplace(kind, stats_over(rows));
    }
    return report;
}

} // namespace evicast
