#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace ehv {

struct CheckFailure {
  nlohmann::json inputs;
  std::string expected;
  std::string got;
};

// Result of one verification suite. Serializes to the shared report schema
// {suite, config, cases_run, failures:[{inputs, expected, got}]}.
struct CheckReport {
  std::string suite;
  nlohmann::json config = nlohmann::json::object();
  long cases_run = 0;
  std::vector<CheckFailure> failures;

  bool ok() const { return failures.empty(); }

  void fail(nlohmann::json inputs, std::string expected, std::string got) {
    failures.push_back({std::move(inputs), std::move(expected), std::move(got)});
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["config"] = config;
    j["cases_run"] = cases_run;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
      j["failures"].push_back(
          {{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    }
    return j;
  }
};

}  // namespace ehv
