#include <doctest.h>

#include <json.hpp>
#include <set>
#include <stdexcept>

#include "leibniz/reproduce.hpp"

using namespace leib;

TEST_CASE("expectation ids are unique and every check runs") {
  const auto exps = catalog::expectations();
  CHECK(exps.size() > 100);
  std::set<std::string> ids;
  for (const auto& e : exps) {
    CHECK(ids.insert(e.id).second);
    CHECK_FALSE(e.locus.empty());
  }
}

TEST_CASE("report is deterministic across worker counts") {
  const auto exps = catalog::expectations();
  const Report a = evaluate(exps, 1);
  const Report b = evaluate(exps, 1);
  const Report c = evaluate(exps, 3);
  CHECK(a.json() == b.json());
  CHECK(a.json() == c.json());
  CHECK(a.table() == c.table());
  CHECK(a.matches + a.mismatches + a.flagged == exps.size());
  const auto doc = nlohmann::json::parse(a.json());
  CHECK(doc["records"].size() == exps.size());
  CHECK(doc["summary"]["exit_status"] == a.exit_status());
}

TEST_CASE("exceptions become mismatches") {
  std::vector<catalog::Expectation> exps;
  exps.push_back({"x", "here", "s", "q", "1", [] { return catalog::Outcome{"1", catalog::Status::Match, ""}; }});
  exps.push_back({"y", "here", "s", "q", "1", []() -> catalog::Outcome { throw std::runtime_error("boom"); }});
  const Report r = evaluate(exps, 1);
  CHECK(r.matches == 1);
  CHECK(r.mismatches == 1);
  CHECK(r.records[1].note == "boom");
  CHECK(r.exit_status() == 1);
}
