// qsk: compute quantum Schubert objects, run the identity suites, enumerate
// permutation classes.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>

#include "qsk/permutation.hpp"
#include "qsk/polynomial.hpp"
#include "qsk/quantum.hpp"
#include "qsk/schubert.hpp"
#include "qsk/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultCap = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "text";
  std::string alphabet = "y";
  std::optional<int> max_n;
};

int rank_cap(const Settings& s) {
  static bool warned = false;
  if (s.max_n) {
    if (*s.max_n > kDefaultCap && !std::exchange(warned, true)) {
      std::cerr << "warning: rank cap raised to " << *s.max_n << "; runtime grows factorially with n\n";
    }
    return *s.max_n;
  }
  if (const char* env = std::getenv("QSK_MAX_N")) {
    int v = 0;
    try {
      v = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("QSK_MAX_N is not an integer: ") + env);
    }
    if (v > kDefaultCap && !std::exchange(warned, true)) std::cerr << "warning: rank cap raised to " << v << " by QSK_MAX_N\n";
    return v;
  }
  return kDefaultCap;
}

void check_rank(int n, const Settings& s) {
  if (n < 1) throw UsageError("rank must be at least 1");
  const int cap = rank_cap(s);
  if (n > cap) throw UsageError("rank " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) + " (see --max-n)");
}

nlohmann::ordered_json polynomial_json(const qsk::Polynomial& p, const qsk::FormatOptions& opts) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (qsk::Family f : {qsk::Family::Q, qsk::Family::X, qsk::Family::Y}) {
      for (int i = 1; i <= t.monomial.max_index(f); ++i) {
        const qsk::Variable v{f, i};
        if (int e = t.monomial.exponent(v)) exps[qsk::to_string(v, opts)] = e;
      }
    }
    terms.push_back({{"coefficient", t.coeff.str()}, {"exponents", exps}});
  }
  return {{"polynomial", qsk::to_string(p, opts)}, {"terms", terms}};
}

void emit(const std::string& object, const qsk::Polynomial& p, const Settings& s) {
  qsk::FormatOptions opts;
  opts.y_letter = s.alphabet == "a" ? 'a' : 'y';
  if (s.format == "json") {
    nlohmann::ordered_json j{{"object", object}};
    j.update(polynomial_json(p, opts));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << qsk::to_string(p, opts) << "\n";
  }
}

struct ComputeArgs {
  std::string what;
  std::string w;
  std::optional<int> n;
  std::string shape;
  std::optional<int> r;
  std::string alpha;
  std::string poly;
  int m = 0;
};

qsk::Permutation need_permutation(const ComputeArgs& a) {
  if (a.w.empty()) throw UsageError(a.what + " needs --w");
  return qsk::Permutation::parse(a.w);
}

int need_r(const ComputeArgs& a) {
  if (!a.r) throw UsageError(a.what + " needs --r");
  return *a.r;
}

int run_compute(const ComputeArgs& a, const Settings& s) {
  qsk::QuantumEngine& engine = qsk::default_engine();
  auto rank_for = [&](int minimum) {
    const int n = a.n.value_or(minimum);
    check_rank(n, s);
    return n;
  };
  qsk::Polynomial result;
  if (a.what == "schubert") {
    const auto w = need_permutation(a);
    check_rank(w.rank(), s);
    result = qsk::schubert(w);
  } else if (a.what == "qschubert" || a.what == "qdouble") {
    const auto w = need_permutation(a);
    const qsk::AmbientRank n(rank_for(w.rank()));
    result = a.what == "qschubert" ? engine.q_schubert(w, n) : engine.q_double_schubert(w, n);
  } else if (a.what == "qschur" || a.what == "qfactorial") {
    if (a.shape.empty()) throw UsageError(a.what + " needs --shape");
    const auto lambda = qsk::parse_partition(a.shape);
    const int r = need_r(a);
    if (!a.n) throw UsageError(a.what + " needs --n");
    const qsk::AmbientRank n(rank_for(*a.n));
    result = a.what == "qschur" ? engine.q_schur(lambda, r, n) : engine.q_factorial_schur(lambda, r, n);
  } else if (a.what == "quantize") {
    if (a.poly.empty()) throw UsageError("quantize needs --poly");
    const auto f = qsk::parse_polynomial(a.poly);
    const int n = a.n.value_or(std::max(1, f.max_index(qsk::Family::X)));
    check_rank(n, s);
    result = engine.quantize(f, n);
  } else if (a.what == "qmonomial") {
    if (a.alpha.empty()) throw UsageError("qmonomial needs --alpha");
    const auto alpha = qsk::parse_composition(a.alpha);
    const qsk::AmbientRank n(rank_for(alpha.size()));
    result = engine.q_monomial(alpha, n);
  } else if (a.what == "stable") {
    const auto w = need_permutation(a);
    if (a.m < 0) throw UsageError("--m must be nonnegative");
    check_rank(w.rank() + a.m, s);
    result = engine.stable_approx(w, a.m);
  } else {
    throw UsageError("unknown object '" + a.what + "'");
  }
  emit(a.what, result, s);
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  int n = 4;
  bool slow = false;
  unsigned jobs = 0;
  std::string only_case;
  bool mutate = false;
};

// Conjecture misses are data; only the theorem suites decide the exit status
// of a multi-suite run.
int run_verify(const VerifyArgs& a, const Settings& s) {
  if (a.suite != "all" && !qsk::verify::is_known_suite(a.suite)) throw UsageError("unknown suite '" + a.suite + "'");
  check_rank(a.n, s);
  qsk::QuantumEngine mutated(qsk::QuantumEngine::Options{.corrupt_e2 = true});
  qsk::verify::Config config;
  config.n = a.n;
  config.slow = a.slow;
  config.jobs = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  if (!a.only_case.empty()) config.only_case = a.only_case;
  if (a.mutate) config.engine = &mutated;

  std::vector<qsk::verify::Report> reports;
  if (a.suite == "all") {
    if (config.only_case) throw UsageError("--case needs a single --suite");
    reports = qsk::verify::run_all(config);
  } else {
    reports.push_back(qsk::verify::run_suite(a.suite, config));
  }

  bool ok = true;
  for (const auto& r : reports) {
    if (!r.passed() && (a.suite != "all" || r.suite != "conjectures")) ok = false;
  }
  if (s.format == "json") {
    if (reports.size() == 1) {
      std::cout << qsk::verify::to_json(reports.front()).dump(2) << "\n";
    } else {
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& r : reports) all.push_back(qsk::verify::to_json(r));
      std::cout << all.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) std::cout << qsk::verify::to_text(r);
    if (reports.size() > 1) std::cout << (ok ? "all theorem suites passed" : "some theorem suites failed") << "\n";
  }
  return ok ? 0 : kExitFailure;
}

int run_enumerate(const std::string& tag, int n, bool count_only, const Settings& s) {
  const auto cls = qsk::parse_perm_class(tag);
  if (!cls) throw UsageError("unknown class '" + tag + "'");
  check_rank(n, s);
  const auto perms = qsk::enumerate_class(n, *cls, rank_cap(s));
  if (count_only) {
    std::cout << perms.size() << "\n";
  } else {
    for (const auto& w : perms) std::cout << w << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Schubert polynomials and their determinantal formulas"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  int max_n = 0;
  auto* max_n_opt = app.add_option("--max-n", max_n, "Raise the rank cap (default 6)");
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  ComputeArgs compute;
  auto* cmd_compute = app.add_subcommand("compute", "Compute one polynomial");
  cmd_compute->add_option("what", compute.what, "Object")
      ->required()
      ->check(CLI::IsMember({"schubert", "qschubert", "qdouble", "qschur", "qfactorial", "quantize", "qmonomial", "stable"}));
  cmd_compute->add_option("--w", compute.w, "Permutation in one-line notation");
  cmd_compute->add_option("--n", compute.n, "Ambient rank");
  cmd_compute->add_option("--shape", compute.shape, "Partition, e.g. 2,1");
  cmd_compute->add_option("--r", compute.r, "Number of x variables of the Schur function");
  cmd_compute->add_option("--alpha", compute.alpha, "Composition, e.g. 2,0,1");
  cmd_compute->add_option("--poly", compute.poly, "Polynomial in x");
  cmd_compute->add_option("--m", compute.m, "Padding of the stable approximant");
  cmd_compute->add_option("--alphabet", settings.alphabet, "Letter for the second alphabet")
      ->check(CLI::IsMember({"y", "a"}));
  cmd_compute->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Run identity suites");
  cmd_verify->add_option("--suite", verify.suite, "Suite name or all");
  cmd_verify->add_option("--n", verify.n, "Largest rank checked");
  cmd_verify->add_flag("--slow", verify.slow, "Include the slow ranks");
  cmd_verify->add_option("--jobs", verify.jobs, "Worker threads (default: all cores)");
  cmd_verify->add_option("--case", verify.only_case, "Run a single case by id");
  cmd_verify->add_flag("--mutate", verify.mutate, "Use a deliberately corrupted e~_2(X_2)");
  cmd_verify->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string tag;
  int enum_n = 0;
  bool count_only = false;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "List a permutation class");
  cmd_enumerate->add_option("--class", tag, "dominant, grassmannian, vexillary, rv, avoiding321, smooth")->required();
  cmd_enumerate->add_option("--n", enum_n, "Rank")->required();
  cmd_enumerate->add_flag("--count", count_only, "Print only the count");

  VerifyArgs conjecture;
  conjecture.suite = "conjectures";
  auto* cmd_conjecture = app.add_subcommand("conjecture", "Scan the conjectured determinants");
  cmd_conjecture->add_option("--n", conjecture.n, "Largest rank scanned");
  cmd_conjecture->add_option("--jobs", conjecture.jobs, "Worker threads");
  cmd_conjecture->add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (max_n_opt->count() > 0) settings.max_n = max_n;

  try {
    if (*cmd_compute) return run_compute(compute, settings);
    if (*cmd_verify) return run_verify(verify, settings);
    if (*cmd_enumerate) return run_enumerate(tag, enum_n, count_only, settings);
    if (*cmd_conjecture) return run_verify(conjecture, settings);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qsk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
