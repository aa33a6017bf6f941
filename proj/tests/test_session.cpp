#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "qrohf/report.hpp"
#include "qrohf/session.hpp"
#include "support.hpp"

using namespace qrohf;

TEST_CASE("the bundled fixture parses and validates") {
  const Session session = testsupport::load_fixture("equipment_panel.json");
  CHECK(session.config.q == doctest::Approx(3.0));
  CHECK(session.config.ci_bar == doctest::Approx(0.1));
  CHECK(session.config.gci_bar == doctest::Approx(0.1));
  CHECK(session.alternatives == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(session.expert_ids == std::vector<std::string>{"d1", "d2", "d3"});
  CHECK(session.panel.weights[0] == doctest::Approx(0.3));
  for (const auto& m : session.panel.matrices) {
    CHECK(validate(m, session.config.rung()).ok());
  }
}

TEST_CASE("weight sums are enforced") {
  std::string text = testsupport::read_file(
      testsupport::fixture_path("equipment_panel.json"));
  // 0.3 + 0.2 + 0.5 -> 0.3 + 0.2 + 0.4
  const auto pos = text.find("\"weight\": 0.5");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 13, "\"weight\": 0.4");
  CHECK_THROWS_WITH_AS(parse_session(text),
                       doctest::Contains("weights sum"), SessionError);
}

TEST_CASE("missing lower-triangle entries are located") {
  auto doc = nlohmann::ordered_json::parse(
      testsupport::read_file(testsupport::fixture_path("equipment_panel.json")));
  doc["experts"][0]["matrix"][1][0] = nullptr;
  try {
    parse_session(doc.dump());
    FAIL("expected a SessionError");
  } catch (const SessionError& e) {
    CHECK(e.where() == "experts[0].matrix[1][0]");
  }
}

TEST_CASE("reciprocity violations are located") {
  auto doc = nlohmann::ordered_json::parse(
      testsupport::read_file(testsupport::fixture_path("equipment_panel.json")));
  doc["experts"][1]["matrix"][1][0]["mu"] = {0.9, 0.91, 0.92};
  CHECK_THROWS_WITH_AS(parse_session(doc.dump()),
                       doctest::Contains("reciprocity"), SessionError);
}

TEST_CASE("rung violations are rejected at parse time") {
  auto doc = nlohmann::ordered_json::parse(
      testsupport::read_file(testsupport::fixture_path("equipment_panel.json")));
  doc["q"] = 1;  // 0.7833 + 0.1833 stays fine; push one entry over the line
  doc["experts"][1]["matrix"][1][2]["mu"] = {0.85, 0.9, 0.95};
  doc["experts"][1]["matrix"][2][1]["nu"] = {0.85, 0.9, 0.95};
  CHECK_THROWS_WITH_AS(parse_session(doc.dump()),
                       doctest::Contains("rung"), SessionError);
}

TEST_CASE("session round trip is stable") {
  const std::string original = testsupport::read_file(
      testsupport::fixture_path("equipment_panel.json"));
  const Session first = parse_session(original);
  const std::string emitted = emit_session(first);
  const Session second = parse_session(emitted);
  CHECK(emit_session(second) == emitted);
  for (std::size_t t = 0; t < first.panel.expert_count(); ++t) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t s = 0; s < 3; ++s) {
          CHECK(second.panel.matrices[t].at(i, j).mu[s] ==
                doctest::Approx(first.panel.matrices[t].at(i, j).mu[s]));
        }
      }
    }
  }
}

TEST_CASE("machine reports re-parse close to the in-memory values") {
  const Session session = testsupport::load_fixture("equipment_panel.json");
  const DecisionReport report = run_pipeline(session.panel, session.config);
  const std::string text = emit_report(report, session, ReportFormat::machine);
  const auto doc = nlohmann::ordered_json::parse(text);

  for (std::size_t t = 0; t < 3; ++t) {
    CHECK(doc["experts"][t]["ci_before"].get<double>() ==
          doctest::Approx(report.expert_stages[t].ci_before).epsilon(1e-6));
  }
  const auto& ranking = doc["ranking"];
  for (std::size_t p = 0; p < report.priority.ranking.size(); ++p) {
    CHECK(ranking[p]["alternative"].get<std::string>() ==
          session.alternatives[report.priority.ranking[p].index]);
    CHECK(ranking[p]["score"].get<double>() ==
          doctest::Approx(report.priority.ranking[p].score).epsilon(1e-6));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t s = 0; s < 3; ++s) {
        CHECK(doc["group"][i][j]["mu"][s].get<double>() ==
              doctest::Approx(report.group.at(i, j).mu[s]).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("a run without blend iterations reports an empty trace") {
  auto doc = nlohmann::ordered_json::parse(
      testsupport::read_file(testsupport::fixture_path("equipment_panel.json")));
  doc["thresholds"]["gci_bar"] = 0.2;  // already at consensus at this level
  const Session session = parse_session(doc.dump());
  const DecisionReport report = run_pipeline(session.panel, session.config);
  REQUIRE(report.consensus.iterations == 0);
  const auto out = nlohmann::ordered_json::parse(
      emit_report(report, session, ReportFormat::machine));
  CHECK(out["consensus"]["trace"].is_array());
  CHECK(out["consensus"]["trace"].empty());
}

TEST_CASE("human report carries the ranking line") {
  const Session session = testsupport::load_fixture("equipment_panel.json");
  const DecisionReport report = run_pipeline(session.panel, session.config);
  const std::string text = emit_report(report, session, ReportFormat::human);
  CHECK(text.find("x1 > x2 > x3 > x4") != std::string::npos);
  CHECK(text.find("Consistency") != std::string::npos);
  CHECK(text.find("Ranking") != std::string::npos);
}

TEST_CASE("malformed documents fail with located errors") {
  CHECK_THROWS_AS(parse_session("not json at all"), SessionError);
  CHECK_THROWS_WITH_AS(parse_session("{}"), doctest::Contains("q"), SessionError);
  CHECK_THROWS_WITH_AS(parse_session(R"({"q": 0.5, "l": 1})"),
                       doctest::Contains(">= 1"), SessionError);
}
