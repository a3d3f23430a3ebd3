#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace polyext::verify {

  // One mismatch between a characterisation and its oracle. Inputs are in
  // element grammar so they can be replayed through the CLI.
  struct Failure {
    std::vector<std::string> inputs;
    std::string              expected;
    std::string              actual;
  };

  struct SuiteReport {
    std::string   suite;
    std::string   anchor;
    std::string   context;
    std::string   verdict;
    std::uint64_t cases = 0;
    // At most max_failures are kept; failure_count counts all of them.
    std::vector<Failure> failures;
    std::uint64_t        failure_count = 0;
    nlohmann::json       details       = nlohmann::json::object();
    std::int64_t         ms            = 0;

    static constexpr std::size_t max_failures = 25;

    bool passed() const noexcept {
      return failure_count == 0;
    }

    void fail(std::vector<std::string> inputs,
              std::string              expected,
              std::string              actual);
  };

  // { "suite", "anchor", "context", "verdict", "pass", "cases",
  //   "failure_count", "failures": [{"inputs", "expected", "actual"}],
  //   "details", "ms" }. Without timing, "ms" is written as 0 so that equal
  // runs serialise to identical bytes.
  nlohmann::json to_json(SuiteReport const& report, bool with_timing = true);
  nlohmann::json to_json(std::vector<SuiteReport> const& reports,
                         bool                            with_timing = true);

  // One line per suite, followed by one indented line per kept failure.
  std::string to_text(SuiteReport const& report);

}  // namespace polyext::verify
