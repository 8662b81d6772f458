#include "leibniz/reproduce.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <sstream>

#include <json.hpp>

namespace leib {

Report evaluate(const std::vector<catalog::Expectation>& exps, int workers) {
  Report rep;
  rep.records.resize(exps.size());
  const auto count = static_cast<long>(exps.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
  for (long i = 0; i < count; ++i) {
    const auto& e = exps[static_cast<std::size_t>(i)];
    ReportRecord r{e.id, e.locus, e.subject, e.quantity, e.expected, "", catalog::Status::Mismatch, ""};
    try {
      const catalog::Outcome o = e.check();
      r.computed = o.computed;
      r.status = o.status;
      r.note = o.note;
    } catch (const std::exception& ex) {
      r.computed = "error";
      r.note = ex.what();
    }
    rep.records[static_cast<std::size_t>(i)] = std::move(r);
  }
  for (const auto& r : rep.records) {
    switch (r.status) {
      case catalog::Status::Match: ++rep.matches; break;
      case catalog::Status::Mismatch: ++rep.mismatches; break;
      case catalog::Status::Flagged: ++rep.flagged; break;
    }
  }
  return rep;
}

int reproduce_workers() {
  if (const char* env = std::getenv("LEIBNIZ_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 1024) return static_cast<int>(v);
  }
  return 1;
}

Report reproduce() { return evaluate(catalog::expectations(), reproduce_workers()); }

std::string Report::table() const {
  std::size_t wid = 2, wsub = 7;
  for (const auto& r : records) {
    wid = std::max(wid, r.id.size());
    wsub = std::max(wsub, r.subject.size());
  }
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("status", 9) << pad("id", wid + 2) << pad("subject", wsub + 2) << "quantity\n";
  for (const auto& r : records) {
    os << pad(catalog::to_string(r.status), 9) << pad(r.id, wid + 2) << pad(r.subject, wsub + 2) << r.quantity
       << "\n";
    os << std::string(9, ' ') << "locus: " << r.locus << "\n";
    os << std::string(9, ' ') << "expected: " << r.expected << "\n";
    os << std::string(9, ' ') << "computed: " << r.computed << "\n";
    if (!r.note.empty()) os << std::string(9, ' ') << "note: " << r.note << "\n";
  }
  os << matches << " match, " << mismatches << " mismatch, " << flagged << " flagged\n";
  return os.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json x;
    x["id"] = r.id;
    x["locus"] = r.locus;
    x["subject"] = r.subject;
    x["quantity"] = r.quantity;
    x["expected"] = r.expected;
    x["computed"] = r.computed;
    x["status"] = catalog::to_string(r.status);
    if (!r.note.empty()) x["note"] = r.note;
    j["records"].push_back(std::move(x));
  }
  j["summary"] = {{"match", matches}, {"mismatch", mismatches}, {"flagged", flagged}, {"exit_status", exit_status()}};
  return j.dump(2);
}

}  // namespace leib
