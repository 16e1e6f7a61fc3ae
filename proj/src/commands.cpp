#include "evicast/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "evicast/combination.hpp"
#include "evicast/decision.hpp"
#include "evicast/errors.hpp"
#include "evicast/evaluation.hpp"
#include "evicast/evidence_io.hpp"

namespace evicast {

std::string format_fixed(double value, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    // llround rounds half away from zero, matching the report convention.
    long long scaled = std::llround(value * scale);
    std::string sign;
    if (scaled < 0) {
        sign = "-";
        scaled = -scaled;
    }
    std::string digits = std::to_string(scaled);
    if (digits.size() <= static_cast<std::size_t>(decimals))
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    if (decimals == 0) return sign + digits;
    return sign + digits.substr(0, digits.size() - decimals) + "." +
           digits.substr(digits.size() - decimals);
}

std::string format_weight(double value) {
    if (value > 0.0 && std::llround(value * 1000.0) == 0) return "<0.001";
    return format_fixed(value, 3);
}

namespace {

std::string lpad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string rpad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// ---------------------------------------------------------------- pipeline

struct LabelledMass {
    MassFunction mass;
    std::string source; // "expert/criterion label"
};

std::vector<LabelledMass> masses_of_file(const EvidenceFile& file, const FramePtr& frame) {
    std::vector<LabelledMass> out;
    for (const auto& spec : file.evidence) {
        try {
            const Evidence e = to_evidence(spec, *frame);
            out.push_back({evidence_to_mass(frame, e), file.expert_id + "/" + spec.label});
        } catch (const Error& e) {
            throw ValidationError("match '" + file.match_id + "', expert '" + file.expert_id +
                                  "', evidence '" + spec.label + "': " + e.what());
        }
    }
    return out;
}

MassFunction combine_named(const std::vector<LabelledMass>& pieces, const std::string& context) {
    std::vector<MassFunction> masses;
    masses.reserve(pieces.size());
    for (const auto& p : pieces) masses.push_back(p.mass);
    try {
        return combine_all(masses);
    } catch (const TotalConflictError& e) {
        const std::size_t step = e.fold_step();
        std::ostringstream os;
        os << context << ": total conflict, ";
        if (step == 1)
            os << "'" << pieces[0].source << "' and '" << pieces[1].source
               << "' are irreconcilable";
        else
            os << "'" << pieces[step].source
               << "' is irreconcilable with the combination of the preceding " << step
               << " pieces (starting with '" << pieces[0].source << "')";
        throw TotalConflictError(os.str(), step);
    }
}

RankedPrediction ranked_from(const std::vector<LabelledMass>& pieces, const std::string& context) {
    return rank(distribute_over_singletons(combine_named(pieces, context)));
}

Score top_score(const RankedPrediction& r) {
    return parse_score(r.frame->label(r.top));
}

// ------------------------------------------------------------- predictions

void render_ranking_table(std::ostream& out, const RankedPrediction& r) {
    std::size_t score_width = 5;
    for (const auto& e : r.ranking)
        score_width = std::max(score_width, r.frame->label(e.index).size());

    out << lpad("rank", 5) << "  " << rpad("score", score_width) << "  "
        << lpad("weight", 6) << "\n";
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
        const auto& e = r.ranking[i];
        out << lpad(std::to_string(i + 1), 5) << "  "
            << rpad(r.frame->label(e.index), score_width) << "  "
            << lpad(format_weight(e.weight), 6) << "\n";
    }
    out << "top prediction: " << r.frame->label(r.top) << " (weight "
        << format_weight(r.ranking.front().weight) << ")\n";
}

void render_ranking_rows(std::ostream& out, const RankedPrediction& r,
                         const std::string& match_id, const std::string& source) {
    for (std::size_t i = 0; i < r.ranking.size(); ++i) {
        const auto& e = r.ranking[i];
        out << match_id << ',' << source << ',' << i + 1 << ','
            << r.frame->label(e.index) << ',' << format_fixed(e.weight, 6) << "\n";
    }
}

// Evidence files of one match keyed by expert, pieces in file order.
std::map<std::string, std::vector<const EvidenceFile*>> group_by_expert(
    const std::vector<EvidenceFile>& files, const std::string& match_id) {
    std::map<std::string, std::vector<const EvidenceFile*>> by_expert;
    for (const auto& f : files)
        if (f.match_id == match_id) by_expert[f.expert_id].push_back(&f);
    return by_expert;
}

std::vector<LabelledMass> expert_masses(const std::vector<const EvidenceFile*>& files,
                                        const FramePtr& frame) {
    std::vector<LabelledMass> out;
    for (const auto* f : files) {
        auto pieces = masses_of_file(*f, frame);
        out.insert(out.end(), std::make_move_iterator(pieces.begin()),
                   std::make_move_iterator(pieces.end()));
    }
    return out;
}

// ------------------------------------------------------------------ report

struct TallyCells {
    std::string source;
    std::array<std::string, 8> cells;
};

constexpr std::array<const char*, 8> kTallyHeaders = {
    "results", "outcomes", "s_r", "s_r/n", "s_o", "s_o/n", "s_ro", "s_ro/2n"};

TallyCells cells_of(const SourceTally& t, const ColumnStats* stats) {
    // A trailing '*' marks the column max across the expert rows.
    const auto mark_int = [&](int v, int max_v) {
        return std::to_string(v) + (stats && v == max_v ? "*" : "");
    };
    const auto mark_ratio = [&](double v, double max_v) {
        return format_fixed(v, 3) + (stats && v == max_v ? "*" : "");
    };
    TallyCells row;
    row.source = t.source.expert.empty() ? to_string(t.source) : t.source.expert;
    row.cells = {
        mark_int(t.correct_results, stats ? stats->max_correct_results : 0),
        mark_int(t.correct_outcomes, stats ? stats->max_correct_outcomes : 0),
        mark_int(t.sum_sr, stats ? stats->max_sum_sr : 0),
        mark_ratio(t.ratio_sr(), stats ? stats->max_ratio_sr : 0.0),
        mark_int(t.sum_so, stats ? stats->max_sum_so : 0),
        mark_ratio(t.ratio_so(), stats ? stats->max_ratio_so : 0.0),
        mark_int(t.sum_sro, stats ? stats->max_sum_sro : 0),
        mark_ratio(t.ratio_sro(), stats ? stats->max_ratio_sro : 0.0),
    };
    return row;
}

TallyCells cells_of_mean(const ColumnStats& s) {
    TallyCells row;
    row.source = "mean";
    row.cells = {
        format_fixed(s.mean_correct_results, 2),
        format_fixed(s.mean_correct_outcomes, 2),
        format_fixed(s.mean_sum_sr, 2),
        format_fixed(s.mean_ratio_sr, 3),
        format_fixed(s.mean_sum_so, 2),
        format_fixed(s.mean_ratio_so, 3),
        format_fixed(s.mean_sum_sro, 2),
        format_fixed(s.mean_ratio_sro, 3),
    };
    return row;
}

void render_tally_table(std::ostream& out, const std::string& title,
                        const std::vector<SourceTally>& rows, const ColumnStats* stats) {
    std::vector<TallyCells> body;
    for (const auto& t : rows) body.push_back(cells_of(t, rows.size() > 1 ? stats : nullptr));
    if (stats && rows.size() > 1) body.push_back(cells_of_mean(*stats));

    std::size_t source_width = 6;
    std::array<std::size_t, 8> widths;
    for (std::size_t c = 0; c < widths.size(); ++c) widths[c] = std::string(kTallyHeaders[c]).size();
    for (const auto& row : body) {
        source_width = std::max(source_width, row.source.size());
        for (std::size_t c = 0; c < widths.size(); ++c)
            widths[c] = std::max(widths[c], row.cells[c].size());
    }

    out << title << "\n";
    out << rpad("source", source_width);
    for (std::size_t c = 0; c < widths.size(); ++c)
        out << "  " << lpad(kTallyHeaders[c], widths[c]);
    out << "\n";
    for (const auto& row : body) {
        out << rpad(row.source, source_width);
        for (std::size_t c = 0; c < widths.size(); ++c)
            out << "  " << lpad(row.cells[c], widths[c]);
        out << "\n";
    }
}

void render_report_rows(std::ostream& out, const EvaluationReport& report) {
    out << "source,matches,correct_results,correct_outcomes,"
           "sum_sr,ratio_sr,sum_so,ratio_so,sum_sro,ratio_sro\n";
    for (const auto& t : report.sources) {
        out << to_string(t.source) << ',' << t.matches << ',' << t.correct_results << ','
            << t.correct_outcomes << ',' << t.sum_sr << ',' << format_fixed(t.ratio_sr(), 6)
            << ',' << t.sum_so << ',' << format_fixed(t.ratio_so(), 6) << ',' << t.sum_sro
            << ',' << format_fixed(t.ratio_sro(), 6) << "\n";
    }
    for (const auto& [kind, s] : report.expert_stats) {
        if (report.sources_of(kind).size() < 2) continue;
        out << "mean:" << (kind == PredictionKind::Intuitive ? "intuitive" : "evidence") << ','
            << report.matches_evaluated << ',' << format_fixed(s.mean_correct_results, 6) << ','
            << format_fixed(s.mean_correct_outcomes, 6) << ',' << format_fixed(s.mean_sum_sr, 6)
            << ',' << format_fixed(s.mean_ratio_sr, 6) << ',' << format_fixed(s.mean_sum_so, 6)
            << ',' << format_fixed(s.mean_ratio_so, 6) << ',' << format_fixed(s.mean_sum_sro, 6)
            << ',' << format_fixed(s.mean_ratio_sro, 6) << "\n";
    }
}

void render_report_tables(std::ostream& out, const EvaluationReport& report) {
    out << "evaluated " << report.matches_evaluated
        << (report.matches_evaluated == 1 ? " match (n = " : " matches (n = ")
        << report.matches_evaluated << ")\n";
    out << "schemata: s_r exact result, s_o outcome only, s_ro 2*result + outcome; "
           "* marks the column max across experts\n";

    const auto table = [&](PredictionKind kind, const std::string& title) {
        const auto rows = report.sources_of(kind);
        if (rows.empty()) return;
        const auto it = report.expert_stats.find(kind);
        out << "\n";
        render_tally_table(out, title, rows, it == report.expert_stats.end() ? nullptr : &it->second);
    };
    table(PredictionKind::Evidence, "per-expert evidence-based predictions");
    table(PredictionKind::Intuitive, "per-expert intuitive predictions");
    table(PredictionKind::Combined, "combined prediction (pooled evidence of all experts)");
}

} // namespace

// ---------------------------------------------------------------- validate

int cmd_validate(const std::vector<std::filesystem::path>& paths, std::ostream& out,
                 std::ostream& err) {
    if (paths.empty()) {
        err << "error: no evidence files given\n";
        return kExitValidation;
    }
    const auto frame = make_standard_frame();
    bool any_violation = false;
    bool any_io = false;
    for (const auto& path : paths) {
        try {
            const auto file = load_evidence_file(path);
            const auto violations = check_evidence_file(file, frame);
            if (violations.empty()) {
                out << path.string() << ": OK\n";
            } else {
                any_violation = true;
                out << path.string() << ": " << violations.size()
                    << (violations.size() == 1 ? " violation\n" : " violations\n");
                for (const auto& v : violations) out << "  - " << v << "\n";
            }
        } catch (const IoError& e) {
            any_io = true;
            out << e.what() << "\n";
        } catch (const Error& e) {
            any_violation = true;
            out << e.what() << "\n";
        }
    }
    return any_violation ? kExitValidation : (any_io ? kExitIo : kExitOk);
}

// ----------------------------------------------------------------- predict

int cmd_predict(const PredictOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const auto files = load_evidence_dir(options.evidence_dir);
        const auto frame = make_standard_frame();
        const auto by_expert = group_by_expert(files, options.match_id);
        if (by_expert.empty()) {
            err << "error: no evidence for match '" << options.match_id << "' under '"
                << options.evidence_dir.string() << "'\n";
            return kExitValidation;
        }

        const bool rows = options.format == OutputFormat::Rows;
        if (rows) out << "match_id,source,rank,score,weight\n";

        if (options.mode == PredictMode::Combined) {
            std::vector<LabelledMass> all;
            for (const auto& [expert, expert_files] : by_expert) {
                auto pieces = expert_masses(expert_files, frame);
                all.insert(all.end(), std::make_move_iterator(pieces.begin()),
                           std::make_move_iterator(pieces.end()));
            }
            const auto ranking =
                ranked_from(all, "match '" + options.match_id + "', combined prediction");
            if (rows) {
                render_ranking_rows(out, ranking, options.match_id, "combined");
            } else {
                out << "match " << options.match_id << ", combined prediction ("
                    << by_expert.size() << (by_expert.size() == 1 ? " expert, " : " experts, ")
                    << all.size() << (all.size() == 1 ? " evidence piece)\n\n" : " evidence pieces)\n\n");
                render_ranking_table(out, ranking);
            }
        } else {
            bool first = true;
            for (const auto& [expert, expert_files] : by_expert) {
                const auto pieces = expert_masses(expert_files, frame);
                const auto ranking = ranked_from(
                    pieces, "match '" + options.match_id + "', expert '" + expert + "'");
                if (rows) {
                    render_ranking_rows(out, ranking, options.match_id, expert);
                } else {
                    if (!first) out << "\n";
                    first = false;
                    out << "match " << options.match_id << ", expert " << expert << " ("
                        << pieces.size()
                        << (pieces.size() == 1 ? " evidence piece)\n\n" : " evidence pieces)\n\n");
                    render_ranking_table(out, ranking);
                }
            }
        }
        return kExitOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const TotalConflictError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConflict;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

// ---------------------------------------------------------------- evaluate

int cmd_evaluate(const EvaluateOptions& options, std::ostream& out, std::ostream& err) {
    try {
        const auto fixtures = load_fixtures_file(options.fixtures);
        const auto files = load_evidence_dir(options.evidence_dir);
        const auto frame = make_standard_frame();

        std::set<std::string> matches_with_evidence;
        for (const auto& f : files) matches_with_evidence.insert(f.match_id);

        std::vector<const FixtureRow*> evaluable;
        for (const auto& row : fixtures) {
            if (!row.actual) {
                err << "warning: match '" << row.match_id
                    << "' has no actual result yet, skipped\n";
                continue;
            }
            if (!matches_with_evidence.count(row.match_id)) {
                err << "warning: no evidence for match '" << row.match_id << "', skipped\n";
                continue;
            }
            evaluable.push_back(&row);
        }
        if (evaluable.empty()) {
            out << "no matches to evaluate\n";
            return kExitOk;
        }

        // Ratios share one n, so the expert line-up must not vary between
        // evaluated matches.
        std::optional<std::set<std::string>> expert_set;
        for (const auto* row : evaluable) {
            std::set<std::string> experts;
            for (const auto& [expert, unused] : group_by_expert(files, row->match_id))
                experts.insert(expert);
            if (!expert_set) {
                expert_set = experts;
            } else if (*expert_set != experts) {
                err << "error: match '" << row->match_id
                    << "' has a different expert set than the preceding matches; "
                       "every expert must cover the same matches\n";
                return kExitValidation;
            }
        }

        std::vector<MatchRecord> records;
        std::map<std::string, int> intuitive_count;
        for (const auto* row : evaluable) {
            MatchRecord rec;
            rec.match_id = row->match_id;
            rec.actual = row->actual;

            std::vector<LabelledMass> all;
            for (const auto& [expert, expert_files] : group_by_expert(files, row->match_id)) {
                auto pieces = expert_masses(expert_files, frame);
                const auto ranking = ranked_from(
                    pieces, "match '" + row->match_id + "', expert '" + expert + "'");
                rec.predictions[{PredictionKind::Evidence, expert}] = top_score(ranking);

                for (const auto* f : expert_files) {
                    if (f->intuitive_prediction) {
                        rec.predictions[{PredictionKind::Intuitive, expert}] =
                            parse_score(*f->intuitive_prediction);
                        intuitive_count[expert] += 1;
                        break;
                    }
                }
                all.insert(all.end(), std::make_move_iterator(pieces.begin()),
                           std::make_move_iterator(pieces.end()));
            }
            const auto combined = ranked_from(
                all, "match '" + row->match_id + "', combined prediction");
            rec.predictions[{PredictionKind::Combined, ""}] = top_score(combined);
            records.push_back(std::move(rec));
        }

        // Intuitive predictions are optional, but all-or-none per expert.
        for (const auto& [expert, count] : intuitive_count) {
            if (count != static_cast<int>(evaluable.size())) {
                err << "error: expert '" << expert << "' submitted intuitive predictions for "
                    << count << " of " << evaluable.size()
                    << " evaluated matches; they must cover all or none\n";
                return kExitValidation;
            }
        }

        const auto report = aggregate(records);
        if (options.format == OutputFormat::Rows)
            render_report_rows(out, report);
        else
            render_report_tables(out, report);
        return kExitOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const TotalConflictError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConflict;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

} // namespace evicast
