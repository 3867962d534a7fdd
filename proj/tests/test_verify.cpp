#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qsk/verify.hpp"

using namespace qsk;
using namespace qsk::verify;

namespace {

Report run(const std::string& suite, int n, unsigned jobs = 1, QuantumEngine* engine = nullptr) {
  Config c;
  c.n = n;
  c.jobs = jobs;
  c.engine = engine;
  return run_suite(suite, c);
}

bool has_failure(const Report& r, const std::string& id) {
  for (const auto& f : r.failures) {
    if (f.case_id == id) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 9);
  CHECK(is_known_suite("cauchy"));
  CHECK_FALSE(is_known_suite("nosuch"));
  CHECK_THROWS_AS(suite_cases("nosuch", 3, false), Error);
  for (const auto& s : suite_names()) {
    std::set<std::string> ids;
    for (const auto& c : suite_cases(s, 4, false)) CHECK(ids.insert(c.id).second);
  }
}

TEST_CASE("theorem suites pass at small rank") {
  for (const char* s : {"classical", "cauchy", "schur", "grassmannian", "factorization", "stable", "conjectures"}) {
    const Report r = run(s, 3);
    CHECK_MESSAGE(r.passed(), s);
    CHECK(r.cases > 0);
  }
  const Report all2 = run("schur", 2);
  CHECK(all2.passed());
}

TEST_CASE("the plus-q2 form for 2413 is reported as not holding") {
  const Report r = run("counterexamples", 4);
  CHECK(r.passed());
  CHECK(r.cases == 6);
  REQUIRE(r.observations.size() == 1);
  CHECK(r.observations[0].case_id == "2413-plus-q2");
  CHECK_FALSE(r.observations[0].holds);
}

TEST_CASE("the top-degree factorization is reported, the lower one asserted") {
  const Report f = run("factorization", 4);
  CHECK(f.passed());
  for (const auto& o : f.observations) {
    CHECK(o.case_id.rfind("last-value-one-top-degree/", 0) == 0);
    CHECK_FALSE(o.holds);
  }
}

TEST_CASE("mutation makes the Cauchy suite fail at rank 3") {
  QuantumEngine bad(QuantumEngine::Options{.corrupt_e2 = true});
  const Report r = run("cauchy", 3, 1, &bad);
  CHECK_FALSE(r.passed());
  CHECK(has_failure(r, "single/n=3"));
  CHECK(has_failure(r, "double/n=3"));
  CHECK(run("cauchy", 3).passed());
}

TEST_CASE("reports are deterministic and independent of the worker count") {
  for (const char* s : {"vexillary", "conjectures", "schur"}) {
    const auto a = to_json(run(s, 4, 1), false).dump();
    const auto b = to_json(run(s, 4, 4), false).dump();
    const auto c = to_json(run(s, 4, 3), false).dump();
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("json schema") {
  QuantumEngine bad(QuantumEngine::Options{.corrupt_e2 = true});
  const auto j = to_json(run("cauchy", 3, 1, &bad));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"suite", "n", "cases", "passed", "failures", "observations", "skipped",
                                         "elapsed_ms"});
  CHECK(j["suite"] == "cauchy");
  CHECK(j["passed"] == false);
  REQUIRE(j["failures"].size() > 0);
  const auto& f = j["failures"].at(0);
  CHECK(f["case"] == "single/n=3");
  CHECK(f.contains("expected"));
  CHECK(f.contains("actual"));
  CHECK_FALSE(to_json(run("stable", 1), false).contains("elapsed_ms"));
}

TEST_CASE("failures replay to the recorded values") {
  QuantumEngine bad(QuantumEngine::Options{.corrupt_e2 = true});
  const Report r = run("cauchy", 3, 2, &bad);
  REQUIRE_FALSE(r.failures.empty());
  for (const auto& f : r.failures) {
    for (const auto& c : suite_cases("cauchy", 3, false)) {
      if (c.id != f.case_id) continue;
      const Comparison cmp = c.eval(bad);
      CHECK(to_string(cmp.expected) == f.expected);
      CHECK(to_string(cmp.actual) == f.actual);
    }
  }
}

TEST_CASE("single case selection") {
  Config c;
  c.n = 4;
  c.only_case = "rv-single/w=1342";
  const Report r = run_suite("vexillary", c);
  CHECK(r.cases == 1);
  CHECK(r.passed());
  c.only_case = "nope";
  CHECK_THROWS_AS(run_suite("vexillary", c), Error);
}

TEST_CASE("slow ranks are listed as skipped") {
  Config c;
  c.n = 5;
  const auto cases = suite_cases("cauchy", 5, false);
  for (const auto& k : cases) CHECK(k.id.find("n=5") == std::string::npos);
  CHECK(suite_cases("cauchy", 5, true).size() > cases.size());
}

TEST_CASE("report mode records without failing") {
  const Report r = run("conjectures", 4);
  CHECK(r.passed());
  std::size_t misses = 0;
  for (const auto& o : r.observations) misses += o.holds ? 0 : 1;
  CHECK(misses > 0);
  const Report d = run("schur", 3);
  bool found = false;
  for (const auto& o : d.observations) {
    if (o.case_id == "duality/lambda=(2,1)") {
      found = true;
      CHECK_FALSE(o.holds);
    }
  }
  CHECK(found);
}

TEST_CASE("text rendering") {
  const std::string t = to_text(run("counterexamples", 4));
  CHECK(t.find("reported miss 2413-plus-q2") != std::string::npos);
  CHECK(t.find("counterexamples") == 0);
  QuantumEngine bad(QuantumEngine::Options{.corrupt_e2 = true});
  CHECK(to_text(run("cauchy", 3, 1, &bad)).find("FAIL single/n=3") != std::string::npos);
}
