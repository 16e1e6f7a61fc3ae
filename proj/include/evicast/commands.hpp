#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace evicast {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitConflict = 2;
inline constexpr int kExitIo = 3;

enum class OutputFormat { Table, Rows };

enum class PredictMode { PerExpert, Combined };

struct PredictOptions {
    std::filesystem::path evidence_dir;
    std::string match_id;
    PredictMode mode = PredictMode::Combined;
    OutputFormat format = OutputFormat::Table;
};

struct EvaluateOptions {
    std::filesystem::path evidence_dir;
    std::filesystem::path fixtures;
    OutputFormat format = OutputFormat::Table;
};

/// Parses and checks each evidence file; prints one OK line or the itemised
/// violations per file. Exit 1 on any violation, 3 on unreadable input.
int cmd_validate(const std::vector<std::filesystem::path>& paths,
                 std::ostream& out, std::ostream& err);

/// Runs the ingestion, combination and ranking pipeline for one match and
/// prints the ranked forecast (one ranking per expert, or one pooled
/// ranking). Exit 2 on total conflict.
int cmd_predict(const PredictOptions& options, std::ostream& out, std::ostream& err);

/// Scores intuitive, per-expert and pooled predictions against the actual
/// results of a fixture file and renders the three report tables.
int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err);

// Rendering helpers, shared with the report tests.

/// Fixed-point with round-half-away-from-zero, e.g. format_fixed(16.0/31, 3)
/// == "0.516".
std::string format_fixed(double value, int decimals);

/// Ranking weights at three decimals; positive values that would render as
/// 0.000 print as "<0.001".
std::string format_weight(double value);

} // namespace evicast
