#include "evicast/evidence_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "evicast/errors.hpp"
#include "evicast/mass.hpp"

namespace evicast {

namespace {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("read failure on '" + path.string() + "'");
    return buffer.str();
}

const json& require_field(const json& obj, const char* key, const std::string& origin,
                          const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(origin + ": " + where + " is missing the '" + key + "' field");
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& origin,
                           const std::string& where) {
    const auto& v = require_field(obj, key, origin, where);
    if (!v.is_string())
        throw ParseError(origin + ": " + where + "." + key + " must be a string");
    return v.get<std::string>();
}

double require_number(const json& obj, const char* key, const std::string& origin,
                      const std::string& where) {
    const auto& v = require_field(obj, key, origin, where);
    if (!v.is_number())
        throw ParseError(origin + ": " + where + "." + key + " must be a number");
    return v.get<double>();
}

} // namespace

EvidenceFile parse_evidence_json(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!root.is_object())
        throw ParseError(origin + ": top level must be a JSON object");

    EvidenceFile file;
    file.match_id = require_string(root, "match_id", origin, "file");
    file.expert_id = require_string(root, "expert_id", origin, "file");
    if (file.match_id.empty())
        throw ParseError(origin + ": match_id must not be empty");
    if (file.expert_id.empty())
        throw ParseError(origin + ": expert_id must not be empty");

    if (const auto it = root.find("intuitive_prediction"); it != root.end() && !it->is_null()) {
        if (!it->is_string())
            throw ParseError(origin + ": intuitive_prediction must be a score string");
        file.intuitive_prediction = it->get<std::string>();
    }

    const auto& evidence = require_field(root, "evidence", origin, "file");
    if (!evidence.is_array() || evidence.empty())
        throw ParseError(origin + ": evidence must be a non-empty array");

    for (std::size_t i = 0; i < evidence.size(); ++i) {
        const std::string where = "evidence[" + std::to_string(i) + "]";
        const auto& piece = evidence[i];
        if (!piece.is_object())
            throw ParseError(origin + ": " + where + " must be an object");

        EvidenceSpec spec;
        spec.label = require_string(piece, "label", origin, where);
        spec.impact = require_number(piece, "impact", origin, where);

        const auto& assignments = require_field(piece, "assignments", origin, where);
        if (!assignments.is_array())
            throw ParseError(origin + ": " + where + ".assignments must be an array");
        for (std::size_t j = 0; j < assignments.size(); ++j) {
            const std::string aw = where + ".assignments[" + std::to_string(j) + "]";
            const auto& assignment = assignments[j];
            if (!assignment.is_object())
                throw ParseError(origin + ": " + aw + " must be an object");

            AssignmentSpec a;
            const auto& scores = require_field(assignment, "scores", origin, aw);
            if (!scores.is_array())
                throw ParseError(origin + ": " + aw + ".scores must be an array of score strings");
            for (const auto& s : scores) {
                if (!s.is_string())
                    throw ParseError(origin + ": " + aw + ".scores entries must be strings");
                a.scores.push_back(s.get<std::string>());
            }
            a.belief = require_number(assignment, "belief", origin, aw);
            spec.assignments.push_back(std::move(a));
        }
        file.evidence.push_back(std::move(spec));
    }
    return file;
}

std::string serialize_evidence_json(const EvidenceFile& file) {
    json root;
    root["match_id"] = file.match_id;
    root["expert_id"] = file.expert_id;
    if (file.intuitive_prediction)
        root["intuitive_prediction"] = *file.intuitive_prediction;
    root["evidence"] = json::array();
    for (const auto& piece : file.evidence) {
        json p;
        p["label"] = piece.label;
        p["impact"] = piece.impact;
        p["assignments"] = json::array();
        for (const auto& a : piece.assignments) {
            json aj;
            aj["scores"] = a.scores;
            aj["belief"] = a.belief;
            p["assignments"].push_back(std::move(aj));
        }
        root["evidence"].push_back(std::move(p));
    }
    return root.dump(2) + "\n";
}

EvidenceFile load_evidence_file(const std::filesystem::path& path) {
    return parse_evidence_json(read_text_file(path), path.string());
}

std::vector<EvidenceFile> load_evidence_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
        throw IoError("'" + dir.string() + "' is not a readable directory");

    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());

    std::vector<EvidenceFile> files;
    files.reserve(paths.size());
    for (const auto& p : paths) files.push_back(load_evidence_file(p));
    return files;
}

Evidence to_evidence(const EvidenceSpec& spec, const Frame& frame) {
    Evidence e;
    e.label = spec.label;
    e.impact = spec.impact;
    for (const auto& a : spec.assignments) {
        std::vector<std::string> canonical;
        canonical.reserve(a.scores.size());
        for (const auto& text : a.scores)
            canonical.push_back(to_string(parse_score(text)));
        RawAssignment raw;
        raw.hypothesis = frame.subset_of_labels(canonical);
        raw.belief = a.belief;
        e.assignments.push_back(std::move(raw));
    }
    return e;
}

std::vector<std::string> check_evidence_file(const EvidenceFile& file, const FramePtr& frame) {
    std::vector<std::string> violations;

    if (file.intuitive_prediction) {
        try {
            parse_score(*file.intuitive_prediction);
        } catch (const Error& e) {
            violations.push_back(std::string("intuitive_prediction: ") + e.what());
        }
    }

    for (std::size_t i = 0; i < file.evidence.size(); ++i) {
        const auto& piece = file.evidence[i];
        const std::string where =
            "evidence[" + std::to_string(i) + "] '" + piece.label + "'";

        if (!std::isfinite(piece.impact) || piece.impact < 0.0 || piece.impact > 1.0) {
            std::ostringstream os;
            os << where << ": impact " << piece.impact << " lies outside [0,1]";
            violations.push_back(os.str());
        }

        bool sets_ok = true;
        std::vector<RawAssignment> converted;
        for (std::size_t j = 0; j < piece.assignments.size(); ++j) {
            const auto& a = piece.assignments[j];
            const std::string aw = where + ".assignments[" + std::to_string(j) + "]";
            std::vector<std::string> canonical;
            bool scores_ok = true;
            for (const auto& text : a.scores) {
                try {
                    canonical.push_back(to_string(parse_score(text)));
                } catch (const Error& e) {
                    violations.push_back(aw + ": " + e.what());
                    scores_ok = false;
                }
            }
            if (a.scores.empty()) {
                violations.push_back(aw + ": empty hypothesis (no scores listed)");
                scores_ok = false;
            }
            if (!std::isfinite(a.belief) || a.belief < 0.0) {
                std::ostringstream os;
                os << aw << ": belief " << a.belief << " must be a finite non-negative number";
                violations.push_back(os.str());
                scores_ok = false;
            }
            if (scores_ok) {
                RawAssignment raw;
                raw.hypothesis = frame->subset_of_labels(canonical);
                raw.belief = a.belief;
                converted.push_back(std::move(raw));
            } else {
                sets_ok = false;
            }
        }

        // Only check the belief total once the individual lines are sound,
        // otherwise the message would double-report.
        if (sets_ok) {
            try {
                validate_mass(frame, converted);
            } catch (const Error& e) {
                violations.push_back(where + ": " + e.what());
            }
        }
    }
    return violations;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

constexpr const char* kFixtureHeader = "match_id,home_team,away_team,actual";

} // namespace

std::vector<FixtureRow> parse_fixtures_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line))
        throw ParseError(origin + ": empty fixture file (expected a header row)");
    ++line_no;
    if (strip_cr(line) != kFixtureHeader)
        throw ParseError(origin + ":1: header must be '" + std::string(kFixtureHeader) + "'");

    std::vector<FixtureRow> rows;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        const std::string locus = origin + ":" + std::to_string(line_no);
        if (fields.size() != 4)
            throw ParseError(locus + ": expected 4 comma-separated fields, got " +
                             std::to_string(fields.size()));

        FixtureRow row;
        row.match_id = fields[0];
        row.home_team = fields[1];
        row.away_team = fields[2];
        if (row.match_id.empty())
            throw ParseError(locus + ": match_id must not be empty");
        if (!seen.insert(row.match_id).second)
            throw ParseError(locus + ": duplicate match_id '" + row.match_id + "'");
        if (!fields[3].empty()) {
            try {
                row.actual = parse_result_score(fields[3]);
            } catch (const Error& e) {
                throw ParseError(locus + ": actual: " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string serialize_fixtures_csv(const std::vector<FixtureRow>& rows) {
    std::ostringstream os;
    os << kFixtureHeader << "\n";
    for (const auto& row : rows) {
        os << row.match_id << ',' << row.home_team << ',' << row.away_team << ',';
        if (row.actual) os << to_string(*row.actual);
        os << "\n";
    }
    return os.str();
}

std::vector<FixtureRow> load_fixtures_file(const std::filesystem::path& path) {
    return parse_fixtures_csv(read_text_file(path), path.string());
}

} // namespace evicast
