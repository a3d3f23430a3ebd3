#include "polyext/report.hpp"

namespace polyext::verify {

  void SuiteReport::fail(std::vector<std::string> inputs,
                         std::string              expected,
                         std::string              actual) {
    ++failure_count;
    if (failures.size() < max_failures) {
      failures.push_back(
          {std::move(inputs), std::move(expected), std::move(actual)});
    }
  }

  nlohmann::json to_json(SuiteReport const& r, bool with_timing) {
    nlohmann::json failures = nlohmann::json::array();
    for (auto const& f : r.failures) {
      failures.push_back({{"inputs", f.inputs},
                          {"expected", f.expected},
                          {"actual", f.actual}});
    }
    return {{"suite", r.suite},
            {"anchor", r.anchor},
            {"context", r.context},
            {"verdict", r.verdict},
            {"pass", r.passed()},
            {"cases", r.cases},
            {"failure_count", r.failure_count},
            {"failures", std::move(failures)},
            {"details", r.details},
            {"ms", with_timing ? r.ms : 0}};
  }

  nlohmann::json to_json(std::vector<SuiteReport> const& reports,
                         bool                            with_timing) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& r : reports) {
      out.push_back(to_json(r, with_timing));
    }
    return out;
  }

  std::string to_text(SuiteReport const& r) {
    std::string line = (r.passed() ? "PASS " : "FAIL ") + r.context + " "
                       + r.suite + ": " + std::to_string(r.cases) + " cases";
    if (!r.verdict.empty()) {
      line += ", " + r.verdict;
    }
    if (!r.passed()) {
      line += ", " + std::to_string(r.failure_count) + " failures";
    }
    line += " (" + std::to_string(r.ms) + " ms)\n";
    for (auto const& f : r.failures) {
      line += "    inputs:";
      for (auto const& in : f.inputs) {
        line += " " + in;
      }
      line += " expected: " + f.expected + " actual: " + f.actual + "\n";
    }
    return line;
  }

}  // namespace polyext::verify
