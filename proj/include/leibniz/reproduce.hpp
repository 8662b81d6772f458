#pragma once

#include <string>
#include <vector>

#include "leibniz/expectations.hpp"

namespace leib {

struct ReportRecord {
  std::string id;
  std::string locus;
  std::string subject;
  std::string quantity;
  std::string expected;
  std::string computed;
  catalog::Status status = catalog::Status::Mismatch;
  std::string note;
};

struct Report {
  std::vector<ReportRecord> records;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t flagged = 0;

  /// 0 iff there is no mismatch.
  int exit_status() const { return mismatches == 0 ? 0 : 1; }
  std::string table() const;
  std::string json() const;
};

/// LEIBNIZ_WORKERS, else 1.
int reproduce_workers();

/// Evaluates every expectation over reproduce_workers() threads. Record
/// order is the catalog order whatever the worker count. An exception
/// inside a check becomes a mismatch carrying the message.
Report reproduce();
Report evaluate(const std::vector<catalog::Expectation>& exps, int workers);

}  // namespace leib
