#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsk/polynomial.hpp"
#include "qsk/quantum.hpp"

namespace qsk::verify {

/// Assert cases decide the suite status; report cases only record whether
/// the identity held (conjectures and statements known to need a reading).
enum class CaseMode { Assert, Report };

struct Comparison {
  Polynomial expected;
  Polynomial actual;
};

struct Case {
  std::string id;
  CaseMode mode = CaseMode::Assert;
  std::function<Comparison(QuantumEngine&)> eval;
};

struct Failure {
  std::string case_id;
  std::string expected;
  std::string actual;
};

struct Observation {
  std::string case_id;
  bool holds = false;
  std::string note;  // error text when the case could not be evaluated
};

struct Report {
  std::string suite;
  int n = 0;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::vector<Observation> observations;
  std::vector<std::string> skipped;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct Config {
  int n = 4;
  bool slow = false;
  unsigned jobs = 1;
  std::optional<std::string> only_case;
  QuantumEngine* engine = nullptr;  // default_engine() when null
};

const std::vector<std::string>& suite_names();
bool is_known_suite(const std::string& name);

/// Cases of one suite at ranks up to n. Throws InvalidArgument for an unknown name.
std::vector<Case> suite_cases(const std::string& suite, int n, bool slow);

Report run_suite(const std::string& suite, const Config& config);
/// Every suite in `suite_names()` order.
std::vector<Report> run_all(const Config& config);

nlohmann::ordered_json to_json(const Report& report, bool with_timing = true);
std::string to_text(const Report& report);

}  // namespace qsk::verify
