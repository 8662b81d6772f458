#pragma once

#include <functional>
#include <string>
#include <vector>

namespace leib::catalog {

enum class Status { Match, Mismatch, Flagged };

std::string to_string(Status s);

struct Outcome {
  std::string computed;
  Status status = Status::Mismatch;
  std::string note;
};

/// One published claim together with the computation that checks it.
struct Expectation {
  std::string id;
  std::string locus;
  std::string subject;
  std::string quantity;
  std::string expected;
  std::function<Outcome()> check;
};

/// The full suite run by `reproduce`, in report order.
std::vector<Expectation> expectations();

}  // namespace leib::catalog
