#include <doctest.h>

#include <string>
#include <vector>

#include "evicast/errors.hpp"
#include "evicast/evidence_io.hpp"

using namespace evicast;

namespace {

const char* kSampleJson = R"({
  "match_id": "m30",
  "expert_id": "e1",
  "intuitive_prediction": "1:0",
  "evidence": [
    {
      "label": "missing key players",
      "impact": 0.6,
      "assignments": [
        { "scores": ["1:0", "2:0"], "belief": 0.5 },
        { "scores": ["2:1", "3:0", "3:1"], "belief": 0.2 },
        { "scores": ["0:0", "1:1"], "belief": 0.1 }
      ]
    },
    {
      "label": "home advantage",
      "impact": 0.8,
      "assignments": [
        { "scores": ["1:0"], "belief": 0.4 }
      ]
    }
  ]
})";

} // namespace

TEST_CASE("a well-formed evidence file parses field for field") {
    const auto file = parse_evidence_json(kSampleJson, "sample");
    CHECK(file.match_id == "m30");
    CHECK(file.expert_id == "e1");
    REQUIRE(file.intuitive_prediction.has_value());
    CHECK(*file.intuitive_prediction == "1:0");
    REQUIRE(file.evidence.size() == 2);
    CHECK(file.evidence[0].label == "missing key players");
    CHECK(file.evidence[0].impact == 0.6);
    REQUIRE(file.evidence[0].assignments.size() == 3);
    CHECK(file.evidence[0].assignments[1].scores ==
          std::vector<std::string>{"2:1", "3:0", "3:1"});
    CHECK(file.evidence[0].assignments[1].belief == 0.2);
}

TEST_CASE("serialisation round-trips semantically") {
    const auto file = parse_evidence_json(kSampleJson, "sample");
    const auto text = serialize_evidence_json(file);
    const auto again = parse_evidence_json(text, "round-trip");
    CHECK(again == file);

    // a file without an intuitive prediction keeps the field absent
    auto bare = file;
    bare.intuitive_prediction.reset();
    CHECK(parse_evidence_json(serialize_evidence_json(bare), "bare") == bare);
}

TEST_CASE("structural defects are reported with their locus") {
    CHECK_THROWS_AS(parse_evidence_json("{", "broken"), ParseError);
    CHECK_THROWS_AS(parse_evidence_json("[]", "broken"), ParseError);
    CHECK_THROWS_AS(parse_evidence_json(R"({"expert_id":"e1","evidence":[]})", "broken"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_evidence_json(R"({"match_id":"m1","expert_id":"e1","evidence":[]})", "broken"),
        ParseError); // empty evidence array
    try {
        parse_evidence_json(
            R"({"match_id":"m1","expert_id":"e1","evidence":[{"label":"x","impact":"high","assignments":[]}]})",
            "origin.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("origin.json") != std::string::npos);
        CHECK(what.find("impact") != std::string::npos);
    }
}

TEST_CASE("to_evidence parses scores strictly against the frame") {
    const auto frame = make_standard_frame();
    EvidenceSpec spec;
    spec.label = "closed world";
    spec.impact = 0.5;
    spec.assignments.push_back({{"1:0", "2:0"}, 0.5});

    const auto e = to_evidence(spec, *frame);
    CHECK(e.assignments.size() == 1);
    CHECK(e.assignments[0].hypothesis.count() == 2);

    spec.assignments.push_back({{"7:0"}, 0.1});
    CHECK_THROWS_AS(to_evidence(spec, *frame), ParseError);
}

TEST_CASE("check_evidence_file itemises every violation") {
    const auto frame = make_standard_frame();
    EvidenceFile file;
    file.match_id = "m1";
    file.expert_id = "e1";

    EvidenceSpec bad_sum;
    bad_sum.label = "over-allocated";
    bad_sum.impact = 0.9;
    bad_sum.assignments.push_back({{"1:0"}, 0.6});
    bad_sum.assignments.push_back({{"1:0"}, 0.5});
    file.evidence.push_back(bad_sum);

    EvidenceSpec bad_score;
    bad_score.label = "out of frame";
    bad_score.impact = 1.2; // out of range too
    bad_score.assignments.push_back({{"7:0"}, 0.2});
    file.evidence.push_back(bad_score);

    const auto violations = check_evidence_file(file, frame);
    REQUIRE(violations.size() == 3);
    CHECK(violations[0].find("exceeding 1") != std::string::npos);
    CHECK(violations[1].find("impact") != std::string::npos);
    CHECK(violations[2].find("7:0") != std::string::npos);
}

TEST_CASE("a clean file yields no violations") {
    const auto frame = make_standard_frame();
    const auto file = parse_evidence_json(kSampleJson, "sample");
    CHECK(check_evidence_file(file, frame).empty());
}

TEST_CASE("an empty hypothesis and a bad intuitive prediction are flagged") {
    const auto frame = make_standard_frame();
    EvidenceFile file;
    file.match_id = "m1";
    file.expert_id = "e1";
    file.intuitive_prediction = "9:9";
    EvidenceSpec spec;
    spec.label = "empty set";
    spec.impact = 0.5;
    spec.assignments.push_back({{}, 0.4});
    file.evidence.push_back(spec);

    const auto violations = check_evidence_file(file, frame);
    REQUIRE(violations.size() == 2);
    CHECK(violations[0].find("intuitive_prediction") != std::string::npos);
    CHECK(violations[1].find("empty hypothesis") != std::string::npos);
}

TEST_CASE("fixture files parse with optional actual results") {
    const std::string text =
        "match_id,home_team,away_team,actual\n"
        "m01,Harbour City,Northgate,2:1\n"
        "m02,Westport,Eastvale,\n"
        "m03,Southmoor,Riverton,6:0\n";
    const auto rows = parse_fixtures_csv(text, "fixtures.csv");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].match_id == "m01");
    CHECK(rows[0].home_team == "Harbour City");
    CHECK(rows[0].actual == Score{2, 1});
    CHECK_FALSE(rows[1].actual.has_value());
    CHECK(rows[2].actual == Score{6, 0}); // results outside the frame are kept
}

TEST_CASE("fixture files round-trip through serialisation") {
    const std::string text =
        "match_id,home_team,away_team,actual\n"
        "m01,Harbour City,Northgate,2:1\n"
        "m02,Westport,Eastvale,\n";
    const auto rows = parse_fixtures_csv(text, "fixtures.csv");
    CHECK(serialize_fixtures_csv(rows) == text);
    CHECK(parse_fixtures_csv(serialize_fixtures_csv(rows), "again") == rows);
}

TEST_CASE("fixture defects name the line") {
    CHECK_THROWS_AS(parse_fixtures_csv("", "f.csv"), ParseError);
    CHECK_THROWS_AS(parse_fixtures_csv("nope\n", "f.csv"), ParseError);

    const std::string dup =
        "match_id,home_team,away_team,actual\n"
        "m01,A,B,1:0\n"
        "m01,C,D,\n";
    try {
        parse_fixtures_csv(dup, "f.csv");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        const std::string what = e.what();
        CHECK(what.find("f.csv:3") != std::string::npos);
        CHECK(what.find("duplicate") != std::string::npos);
    }

    const std::string arity =
        "match_id,home_team,away_team,actual\n"
        "m01,A,B\n";
    CHECK_THROWS_AS(parse_fixtures_csv(arity, "f.csv"), ParseError);

    const std::string bad_score =
        "match_id,home_team,away_team,actual\n"
        "m01,A,B,abc\n";
    CHECK_THROWS_AS(parse_fixtures_csv(bad_score, "f.csv"), ParseError);
}

TEST_CASE("carriage returns are tolerated") {
    const std::string text =
        "match_id,home_team,away_team,actual\r\n"
        "m01,A,B,1:0\r\n";
    const auto rows = parse_fixtures_csv(text, "crlf.csv");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].actual == Score{1, 0});
}

TEST_CASE("unreadable paths raise IoError") {
    CHECK_THROWS_AS(load_evidence_file("/nonexistent/evidence.json"), IoError);
    CHECK_THROWS_AS(load_fixtures_file("/nonexistent/fixtures.csv"), IoError);
    CHECK_THROWS_AS(load_evidence_dir("/nonexistent/dir"), IoError);
}
