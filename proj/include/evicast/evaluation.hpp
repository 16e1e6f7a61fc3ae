#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evicast/frame.hpp"

namespace evicast {

/// Coarse result class of a score.
enum class Outcome { HomeWin, Draw, AwayWin };

Outcome outcome_of(const Score& s);

/// The three assessment schemata: exact result only, outcome only, and the
/// mixed rule (2 points for the exact result, 1 for the right outcome).
enum class Schema { ResultOnly, OutcomeOnly, ResultAndOutcome };

int score_prediction(const Score& pred, const Score& actual, Schema schema);

/// Where a prediction came from: an expert's gut call, an expert's own
/// combined evidence, or the pooled evidence of all experts.
enum class PredictionKind { Intuitive, Evidence, Combined };

struct SourceId {
    PredictionKind kind = PredictionKind::Combined;
    std::string expert; // empty for Combined

    friend auto operator<=>(const SourceId&, const SourceId&) = default;
};

std::string to_string(const SourceId& id);

/// One match with its actual 90-minute result and the predictions to score.
/// The actual score may fall outside the closed-world frame; an exact hit is
/// then impossible but outcome scoring still applies.
struct MatchRecord {
    std::string match_id;
    std::optional<Score> actual;
    std::map<SourceId, Score> predictions;
};

/// Tallies for one prediction source over n matches.
struct SourceTally {
    SourceId source;
    int matches = 0;          // n
    int correct_results = 0;  // exact-score hits
    int correct_outcomes = 0; // outcome hits that are not exact hits
    int sum_sr = 0;
    int sum_so = 0;
    int sum_sro = 0;

    double ratio_sr() const;  // sum_sr / n
    double ratio_so() const;  // sum_so / n
    double ratio_sro() const; // sum_sro / 2n

    /// Rebuilds the point sums from the two hit counts:
    /// sum_sr = results, sum_so = results + outcomes, sum_sro = 2*results + outcomes.
    static SourceTally from_counts(SourceId source, int correct_results,
                                   int correct_outcomes, int matches);
};

/// Per-column mean and max over the expert rows of one prediction kind.
struct ColumnStats {
    double mean_correct_results = 0.0;
    double mean_correct_outcomes = 0.0;
    double mean_sum_sr = 0.0;
    double mean_sum_so = 0.0;
    double mean_sum_sro = 0.0;
    double mean_ratio_sr = 0.0;
    double mean_ratio_so = 0.0;
    double mean_ratio_sro = 0.0;

    int max_correct_results = 0;
    int max_correct_outcomes = 0;
    int max_sum_sr = 0;
    int max_sum_so = 0;
    int max_sum_sro = 0;
    double max_ratio_sr = 0.0;
    double max_ratio_so = 0.0;
    double max_ratio_sro = 0.0;
};

ColumnStats stats_over(const std::vector<SourceTally>& tallies);

struct EvaluationReport {
    int matches_evaluated = 0;
    std::vector<SourceTally> sources; // ordered by (kind, expert)
    /// Mean/max rows, present for kinds with at least one per-expert source.
    std::map<PredictionKind, ColumnStats> expert_stats;

    std::vector<SourceTally> sources_of(PredictionKind kind) const;
};

/// Tallies every record's predictions against its actual result. Every
/// record must carry an actual score, at least one prediction, and the same
/// prediction-source set as the other records (ratios share one n).
EvaluationReport aggregate(const std::vector<MatchRecord>& records);

} // namespace evicast
