#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "picross/runner.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Run operator-algebra verification suites and write a JSON report"};
  std::string configPath;
  std::string suites;
  long long cutoff = 0;
  int grid = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string outPath;
  double perturb = -1.0;
  bool list = false;
  app.add_option("--config", configPath, "JSON config file");
  app.add_option("--suite", suites, "comma-separated suite names, or all");
  auto* cutoffOpt = app.add_option("--cutoff", cutoff, "index-set cutoff");
  auto* gridOpt = app.add_option("--grid", grid, "grid truncation N");
  auto* tolOpt = app.add_option("--tol", tol, "equality tolerance");
  auto* seedOpt = app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--out", outPath, "report path (stdout when omitted)");
  auto* perturbOpt = app.add_option("--perturb", perturb, "inject a perturbation of this size");
  app.add_flag("--list", list, "list suites and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& s : picross::list_suites()) {
      std::cout << s.name << "\t" << s.paperAnchor << "\t" << s.description << "\n";
    }
    return 0;
  }

  picross::SuiteConfig config;
  try {
    if (!configPath.empty()) {
      std::ifstream in(configPath);
      if (!in) {
        std::cerr << "error: cannot read " << configPath << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      config = picross::config_from_json(buf.str());
    }
  } catch (const picross::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!suites.empty()) config.suites = split_commas(suites);
  if (*cutoffOpt) config.cutoff = picross::SemigroupElement(cutoff);
  if (*gridOpt) config.gridN = grid;
  if (*tolOpt) config.tol.eqTol = tol;
  if (*seedOpt) config.seed = seed;
  if (!outPath.empty()) config.outPath = outPath;
  if (*perturbOpt) config.perturb = perturb;
  return picross::run(config, std::cout, std::cerr);
}
