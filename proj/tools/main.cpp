#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evicast/commands.hpp"

namespace {

evicast::OutputFormat parse_format(const std::string& text) {
    return text == "rows" ? evicast::OutputFormat::Rows : evicast::OutputFormat::Table;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evicast: combine expert score predictions expressed as belief "
                 "assignments and evaluate forecast quality"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "check evidence files for violations");
    std::vector<std::string> validate_paths;
    validate->add_option("paths", validate_paths, "evidence files (JSON)")->required();

    // predict
    auto* predict = app.add_subcommand("predict", "rank the scores of one match");
    evicast::PredictOptions predict_options;
    std::string predict_evidence, predict_mode = "combined", predict_format = "table";
    predict->add_option("--evidence", predict_evidence, "directory of evidence files")
        ->required();
    predict->add_option("--match", predict_options.match_id, "match identifier")->required();
    predict->add_option("--mode", predict_mode, "per-expert or combined (default combined)")
        ->check(CLI::IsMember({"per-expert", "combined"}));
    predict->add_option("--format", predict_format, "table or rows (default table)")
        ->check(CLI::IsMember({"table", "rows"}));

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "score predictions against actual results");
    std::string evaluate_evidence, evaluate_fixtures, evaluate_format = "table";
    evaluate->add_option("--evidence", evaluate_evidence, "directory of evidence files")
        ->required();
    evaluate->add_option("--fixtures", evaluate_fixtures, "fixture file (CSV)")->required();
    evaluate->add_option("--format", evaluate_format, "table or rows (default table)")
        ->check(CLI::IsMember({"table", "rows"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return evicast::kExitValidation;
    }

    if (validate->parsed()) {
        std::vector<std::filesystem::path> paths(validate_paths.begin(), validate_paths.end());
        return evicast::cmd_validate(paths, std::cout, std::cerr);
    }
    if (predict->parsed()) {
        predict_options.evidence_dir = predict_evidence;
        predict_options.mode = predict_mode == "per-expert" ? evicast::PredictMode::PerExpert
                                                            : evicast::PredictMode::Combined;
        predict_options.format = parse_format(predict_format);
        return evicast::cmd_predict(predict_options, std::cout, std::cerr);
    }
    evicast::EvaluateOptions evaluate_options;
    evaluate_options.evidence_dir = evaluate_evidence;
    evaluate_options.fixtures = evaluate_fixtures;
    evaluate_options.format = parse_format(evaluate_format);
    return evicast::cmd_evaluate(evaluate_options, std::cout, std::cerr);
}
