#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evicast/frame.hpp"
#include "evicast/mass.hpp"

namespace evicast {

// Evidence files are JSON, one file per (match, expert):
//
//   {
//     "match_id": "m01",
//     "expert_id": "e1",
//     "intuitive_prediction": "2:1",
//     "evidence": [
//       { "label": "missing key players",
//         "impact": 0.6,
//         "assignments": [
//           { "scores": ["1:0", "2:0"], "belief": 0.5 } ] } ]
//   }
//
// Beliefs within one piece may sum to less than one; the remainder is
// reserved judgement and flows to the full frame on validation.

struct AssignmentSpec {
    std::vector<std::string> scores;
    double belief = 0.0;

    friend bool operator==(const AssignmentSpec&, const AssignmentSpec&) = default;
};

struct EvidenceSpec {
    std::string label;
    double impact = 1.0;
    std::vector<AssignmentSpec> assignments;

    friend bool operator==(const EvidenceSpec&, const EvidenceSpec&) = default;
};

struct EvidenceFile {
    std::string match_id;
    std::string expert_id;
    std::optional<std::string> intuitive_prediction;
    std::vector<EvidenceSpec> evidence;

    friend bool operator==(const EvidenceFile&, const EvidenceFile&) = default;
};

/// Parses the JSON text of an evidence file. `origin` names the source in
/// diagnostics (usually the file path).
EvidenceFile parse_evidence_json(const std::string& text, const std::string& origin);

/// Serialises back to JSON. parse(serialize(f)) == f field for field.
std::string serialize_evidence_json(const EvidenceFile& file);

EvidenceFile load_evidence_file(const std::filesystem::path& path);

/// All evidence files (*.json) of a directory in sorted path order.
std::vector<EvidenceFile> load_evidence_dir(const std::filesystem::path& dir);

/// Converts one parsed piece into a domain Evidence: every score string is
/// parsed strictly against the frame. Throws ParseError / ValidationError.
Evidence to_evidence(const EvidenceSpec& spec, const Frame& frame);

/// Every violation in the file, one message each: unparseable scores, empty
/// hypothesis sets, impact or belief range errors, over-allocated beliefs.
/// Empty result means the file is valid.
std::vector<std::string> check_evidence_file(const EvidenceFile& file, const FramePtr& frame);

// Fixture files are comma-delimited text with a header row:
//
//   match_id,home_team,away_team,actual
//   m01,Harbour City,Northgate,2:1
//
// The actual column is empty until the match has been played and may record
// results outside the closed-world frame.

struct FixtureRow {
    std::string match_id;
    std::string home_team;
    std::string away_team;
    std::optional<Score> actual;

    friend bool operator==(const FixtureRow&, const FixtureRow&) = default;
};

std::vector<FixtureRow> parse_fixtures_csv(const std::string& text, const std::string& origin);
std::string serialize_fixtures_csv(const std::vector<FixtureRow>& rows);
std::vector<FixtureRow> load_fixtures_file(const std::filesystem::path& path);

} // namespace evicast
