#include "picross/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "suite_context.hpp"

namespace picross {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

bool known_suite(const std::string& name) {
  if (name == "all") return true;
  const auto& reg = detail::suite_registry();
  return std::any_of(reg.begin(), reg.end(), [&](const auto& e) { return name == e.name; });
}

SemigroupElement element_from_json(const json& j) {
  if (j.is_number_integer()) return SemigroupElement(j.get<long long>());
  if (j.is_array() && j.size() == 4) {
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw ConfigError("semigroup element entries must be integers");
    }
    if (j[1].get<long long>() == 0 || j[3].get<long long>() == 0) throw ConfigError("zero denominator");
    return SemigroupElement(Rational(j[0].get<long long>(), j[1].get<long long>()),
                            Rational(j[2].get<long long>(), j[3].get<long long>()));
  }
  throw ConfigError("semigroup element must be an integer or [a_num, a_den, b_num, b_den]");
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream os;
  os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// JSON has no infinity; unattained residuals are written as null.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::vector<const detail::SuiteEntry*> selected(const SuiteConfig& config) {
  std::set<std::string> names(config.suites.begin(), config.suites.end());
  const bool all = names.count("all") > 0;
  std::vector<const detail::SuiteEntry*> out;
  for (const auto& e : detail::suite_registry()) {
    if (all || names.count(e.name)) out.push_back(&e);
  }
  return out;
}

}  // namespace

void SuiteConfig::validate() const {
  if (gridN < 8) throw ConfigError("gridN must be at least 8");
  if (cutoff < SemigroupElement(4)) throw ConfigError("cutoff must be at least 4");
  if (!(tol.eqTol > 0.0) || !(tol.rankTol > 0.0)) throw ConfigError("tolerances must be positive");
  if (!(perturb >= 0.0)) throw ConfigError("perturb must be nonnegative");
  if (suites.empty()) throw ConfigError("no suites selected");
  for (const auto& s : suites) {
    if (!known_suite(s)) throw ConfigError("unknown suite: " + s);
  }
  if (generators.empty()) throw ConfigError("generators must be nonempty");
  for (const auto& g : generators) {
    if (g <= SemigroupElement(0)) throw ConfigError("generators must be positive");
  }
}

SuiteConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  SuiteConfig c;
  try {
    if (j.contains("suites")) {
      const auto& s = j["suites"];
      c.suites = s.is_string() ? std::vector<std::string>{s.get<std::string>()} : s.get<std::vector<std::string>>();
    }
    if (j.contains("cutoff")) c.cutoff = element_from_json(j["cutoff"]);
    if (j.contains("gridN")) c.gridN = j["gridN"].get<int>();
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      if (t.contains("eqTol")) c.tol.eqTol = t["eqTol"].get<double>();
      if (t.contains("rankTol")) c.tol.rankTol = t["rankTol"].get<double>();
    }
    if (j.contains("generators")) {
      c.generators.clear();
      for (const auto& g : j["generators"]) c.generators.push_back(element_from_json(g));
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("outPath")) c.outPath = j["outPath"].get<std::string>();
    if (j.contains("perturb")) c.perturb = j["perturb"].get<double>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  }
  return c;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<SuiteInfo> list_suites() {
  std::vector<SuiteInfo> out;
  for (const auto& e : detail::suite_registry()) out.push_back({e.name, e.description, e.anchor});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

VerificationReport run_suites(const SuiteConfig& config) {
  config.validate();
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const auto* entry : selected(config)) {
    jobs.push_back(std::async(std::launch::async, [&config, entry] {
      detail::SuiteContext ctx(config);
      entry->run(ctx);
      return ctx.take();
    }));
  }
  VerificationReport report;
  report.version = kVersion;
  report.timestamp = iso_timestamp();
  for (auto& j : jobs) {
    auto part = j.get();
    report.checks.insert(report.checks.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  report.total = static_cast<int>(report.checks.size());
  report.passed = static_cast<int>(
      std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; }));
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"paperAnchor", c.paperAnchor},
                      {"residual", number_or_null(c.residual)},
                      {"threshold", c.threshold},
                      {"pass", c.pass},
                      {"millis", c.millis}});
  }
  json j{{"version", report.version},
         {"timestamp", report.timestamp},
         {"checks", checks},
         {"summary", {{"total", report.total}, {"passed", report.passed}}}};
  return j.dump(2) + "\n";
}

int exit_code(const VerificationReport& report) { return report.passed == report.total ? 0 : 1; }

int run(const SuiteConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::ofstream file;
  if (!config.outPath.empty()) {
    file.open(config.outPath, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << config.outPath << "\n";
      return 2;
    }
  }
  const VerificationReport report = run_suites(config);
  const std::string text = report_to_json(report);
  if (file.is_open()) {
    file << text;
    file.flush();
    if (!file) {
      err << "error: failed writing " << config.outPath << "\n";
      return 2;
    }
  } else {
    out << text;
  }
  for (const auto& c : report.checks) {
    if (!c.pass) err << "FAIL " << c.name << " residual=" << c.residual << " threshold=" << c.threshold << "\n";
  }
  err << report.passed << "/" << report.total << " checks passed\n";
  return exit_code(report);
}

}  // namespace picross
