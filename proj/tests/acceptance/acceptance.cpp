// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria (capped at 1).
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "leibniz/catalog.hpp"
#include "leibniz/error.hpp"
#include "leibniz/holomorph.hpp"
#include "leibniz/iso.hpp"
#include "leibniz/reproduce.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace leib;

namespace {

// Pinned limits.
constexpr double kSearchSeconds = 10.0;
constexpr std::chrono::milliseconds kStretchCap{600'000};
constexpr std::size_t kRandomRouteSamples = 120;
constexpr std::size_t kRandomPropertySamples = 100;
constexpr std::size_t kConjugateSamples = 50;
constexpr std::size_t kTwoNilpotentSamples = 60;

const FieldDesc F3 = FieldDesc::prime(3);
const FieldDesc F5 = FieldDesc::prime(5);

struct Verdict {
  bool pass = true;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
  void info(const std::string& what) { details.push_back(what); }
};

class Expected {
 public:
  explicit Expected(const Report& r) {
    for (const auto& rec : r.records) by_id_.emplace(rec.id, rec);
  }

  // Every record whose id starts with one of the prefixes must match.
  void require(Verdict& v, const std::vector<std::string>& prefixes) const {
    std::size_t seen = 0;
    for (const auto& [id, rec] : by_id_) {
      bool hit = false;
      for (const auto& p : prefixes) hit = hit || id.rfind(p, 0) == 0;
      if (!hit) continue;
      ++seen;
      if (rec.status != catalog::Status::Match) {
        v.fail(id + ": expected " + rec.expected + ", computed " + rec.computed);
      }
    }
    if (seen == 0) v.fail("no expectations under " + prefixes.front());
    else v.info(std::to_string(seen) + " expectations checked");
  }

 private:
  std::map<std::string, ReportRecord> by_id_;
};

void print(int n, const Verdict& v) {
  std::cout << "CRITERION " << n << ": " << (v.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& d : v.details) std::cout << "    " << d << "\n";
}

void collect(Verdict& v, const std::string& subject, const std::vector<std::string>& violations) {
  for (const auto& m : violations) v.fail(subject + ": " + m);
}

Verdict criterion3(const Expected& exp) {
  Verdict v;
  exp.require(v, {"derlie."});
  for (const auto& [name, L] : oracle::suite()) collect(v, name, props::lie_derivation_routes(L));
  const auto samples = oracle::random_right_leibniz(F3, kRandomRouteSamples, 2024, 3);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    collect(v, "random F_3 sample " + std::to_string(i), props::lie_derivation_routes(samples[i]));
  }
  v.info("Der_Lie routes compared on the suite and " + std::to_string(samples.size()) + " random F_3 algebras");
  return v;
}

Verdict criterion4(const Expected& exp) {
  Verdict v;
  exp.require(v, {"hol.dim.", "hol.trivial."});
  for (const auto& [name, L] : oracle::suite()) collect(v, name, props::holomorph_soundness(L));
  return v;
}

Verdict criterion6(const Expected& exp) {
  Verdict v;
  exp.require(v, {"search."});
  struct Case {
    std::string label;
    FieldDesc F;
    long alpha;
    bool exists;
  };
  for (const auto& c : std::vector<Case>{{"F_5, L_4 vs L_5(4)", F5, 4, true},
                                         {"F_5, L_4 vs L_5(2)", F5, 2, false},
                                         {"F_3, L_4 vs L_5(2)", F3, 2, false}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto w = find_isomorphism(catalog::get("L_4", c.F), catalog::get("L_5", Scalar(c.F, c.alpha)));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (w.has_value() != c.exists) v.fail(c.label + ": wrong outcome");
    if (secs >= kSearchSeconds) v.fail(c.label + ": took " + std::to_string(secs) + " s");
    std::ostringstream os;
    os << c.label << ": " << (w ? "witness" : "none") << " in " << secs << " s";
    v.info(os.str());
  }
  // Stretch item: a timeout downgrades to flagged, it does not fail the criterion.
  SearchOptions opts;
  opts.time_limit = kStretchCap;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = search_isomorphism(lie_holomorph(catalog::get("L_4", F3)).algebra,
                                    lie_holomorph(catalog::get("L_7", F3)).algebra, opts);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "stretch, F_3, hol_Lie(L_4) vs hol_Lie(L_7): " << to_string(r.status) << " after " << r.nodes
     << " nodes in " << secs << " s";
  if (r.status == SearchStatus::Found) v.fail(os.str());
  else if (r.status == SearchStatus::Timeout) v.info(os.str() + " (flagged)");
  else v.info(os.str());
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& [name, L] : oracle::suite()) {
    collect(v, name, props::structural_violations(L));
    ++checked;
  }
  const auto rand = oracle::random_right_leibniz(F3, kRandomPropertySamples, 77, 3);
  for (std::size_t i = 0; i < rand.size(); ++i) {
    collect(v, "random F_3 sample " + std::to_string(i), props::structural_violations(rand[i]));
  }
  const auto conj = oracle::random_catalog_conjugates(F3, kConjugateSamples, 78);
  for (std::size_t i = 0; i < conj.size(); ++i) {
    collect(v, "F_3 conjugate " + std::to_string(i), props::structural_violations(conj[i]));
  }
  const auto nil = oracle::random_two_nilpotent(F3, kTwoNilpotentSamples, 79, 4);
  for (std::size_t i = 0; i < nil.size(); ++i) {
    collect(v, "2-nilpotent sample " + std::to_string(i), props::inner_in_lie_derivations(nil[i]));
  }
  collect(v, "d1", props::inner_in_lie_derivations(catalog::get("d1")));
  if (!identity_flags(bider_semidirect(catalog::get("L_B")).algebra).right_leibniz) {
    v.fail("L_B semidirect Bider(L_B) is not right Leibniz");
  }
  v.info(std::to_string(checked + rand.size() + conj.size()) + " algebras for structural properties, " +
         std::to_string(nil.size() + 1) + " for Inn in Der_Lie");
  return v;
}

Verdict criterion10() {
  Verdict v;
  const Report a = evaluate(catalog::expectations(), 1);
  const Report b = evaluate(catalog::expectations(), 1);
  if (a.json() != b.json() || a.table() != b.table()) v.fail("report differs between runs");
  for (const auto& r : a.records) {
    if (r.status == catalog::Status::Mismatch) v.fail(r.id + ": expected " + r.expected + ", computed " + r.computed);
    if (r.status == catalog::Status::Flagged && r.id != "hol.L_3.brackets") v.fail(r.id + ": flagged");
  }
  v.info(std::to_string(a.matches) + " match, " + std::to_string(a.mismatches) + " mismatch, " +
         std::to_string(a.flagged) + " flagged; exit status " + std::to_string(a.exit_status()));
  return v;
}

Verdict guarded(const std::function<Verdict()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Verdict v;
    v.fail(std::string("exception: ") + e.what());
    return v;
  }
}

}  // namespace

int main() {
  const Report report = evaluate(catalog::expectations(), 1);
  const Expected exp(report);
  std::vector<std::pair<int, Verdict>> results;
  auto simple = [&exp](std::vector<std::string> prefixes) {
    return [&exp, prefixes] {
      Verdict v;
      exp.require(v, prefixes);
      return v;
    };
  };
  results.emplace_back(1, guarded(simple({"bider.dim.", "bider.members."})));
  results.emplace_back(2, guarded(simple({"zlie.", "center."})));
  results.emplace_back(3, guarded([&exp] { return criterion3(exp); }));
  results.emplace_back(4, guarded([&exp] { return criterion4(exp); }));
  results.emplace_back(5, guarded(simple({"iso.", "noniso."})));
  results.emplace_back(6, guarded([&exp] { return criterion6(exp); }));
  results.emplace_back(7, guarded(simple({"d1."})));
  results.emplace_back(8, guarded(criterion8));
  results.emplace_back(9, guarded(simple({"misra.", "classical."})));
  results.emplace_back(10, guarded(criterion10));
  int failed = 0;
  for (const auto& [n, v] : results) {
    print(n, v);
    failed += v.pass ? 0 : 1;
  }
  std::cout << (10 - failed) << "/10 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
