// Command-line front end over the C API in libhesscoh.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hesscoh/hesscoh.h"

namespace {

constexpr int kUsageExit = 64;

struct Config {
  std::string h;
  int n = 0;
  std::string mode = "equivariant";
  std::string format = "text";
  int nMax = 0;
  int jobs = 1;
  std::string cacheDir;
  std::string outPath;
  bool noTiming = false;
  std::vector<std::string> suites;
  int fixedPointCap = 7;
  int enumerationCap = 12;
  std::size_t pairBudget = 200000;
};

struct UsageError {
  std::string message;
};

std::vector<int> parseValues(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError{"--h: '" + item + "' is not an integer"};
    values.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw UsageError{"--h: trailing comma"};
  return values;
}

int finish(hc_session* s, hc_status status, const Config& cfg) {
  const std::string output = hc_output(s);
  if (!output.empty()) {
    if (cfg.outPath.empty()) {
      std::cout << output;
    } else {
      std::ofstream out(cfg.outPath, std::ios::binary);
      if (!out || !(out << output)) {
        std::cerr << "hesscoh: cannot write " << cfg.outPath << "\n";
        return kUsageExit;
      }
    }
  }
  if (status != HC_OK) {
    std::cerr << "hesscoh: " << hc_status_name(status) << ": " << hc_last_error(s) << "\n";
  }
  return hc_status_exit_code(status);
}

hc_status configure(hc_session* s, const Config& cfg) {
  hc_format format = HC_FORMAT_TEXT;
  if (cfg.format == "json") format = HC_FORMAT_JSON;
  else if (cfg.format == "latex") format = HC_FORMAT_LATEX;
  hc_status st = hc_session_set_format(s, format);
  if (st == HC_OK) st = hc_session_set_mode(s, cfg.mode == "ordinary" ? HC_MODE_ORDINARY : HC_MODE_EQUIVARIANT);
  if (st == HC_OK) st = hc_session_set_caps(s, cfg.fixedPointCap, cfg.enumerationCap);
  if (st == HC_OK) st = hc_session_set_pair_budget(s, cfg.pairBudget);
  if (st == HC_OK) st = hc_session_set_jobs(s, cfg.jobs);
  if (st == HC_OK && cfg.nMax > 0) st = hc_session_set_n_max(s, cfg.nMax, cfg.nMax);
  if (st == HC_OK) st = hc_session_set_timing(s, cfg.noTiming ? 0 : 1);
  if (st == HC_OK) {
    std::string dir = cfg.cacheDir;
    if (dir.empty()) {
      if (const char* env = std::getenv("HESSCOH_CACHE_DIR")) dir = env;
    }
    st = hc_session_set_cache_dir(s, dir.c_str());
  }
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Cohomology presentations of regular nilpotent Hessenberg varieties"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hc_version()));

  auto addH = [&](CLI::App* cmd) {
    cmd->add_option("--h", cfg.h, "Hessenberg function values, e.g. 2,3,3")->required();
  };
  auto addN = [&](CLI::App* cmd) {
    cmd->add_option("--n", cfg.n, "Size n")->required()->check(CLI::PositiveNumber);
  };
  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--mode", cfg.mode, "equivariant or ordinary")
        ->check(CLI::IsMember({"equivariant", "ordinary"}))
        ->capture_default_str();
    cmd->add_option("--format", cfg.format, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    cmd->add_option("--out", cfg.outPath, "Write output to this file instead of stdout");
    cmd->add_option("--fixed-point-cap", cfg.fixedPointCap, "Largest n for fixed-point enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--enumeration-cap", cfg.enumerationCap, "Largest n for enumerating Hessenberg functions")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--pair-budget", cfg.pairBudget, "S-pair budget for each Groebner basis")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cache-dir", cfg.cacheDir, "Groebner cache directory (default: $HESSCOH_CACHE_DIR)");
  };

  auto* present = app.add_subcommand("present", "Print the ring presentation for h");
  addH(present);
  addCommon(present);
  auto* generators = app.add_subcommand("generators", "Print the table of f_{i,j} for n");
  addN(generators);
  addCommon(generators);
  auto* fixed = app.add_subcommand("fixed-points", "List the fixed points of Hess(h)");
  addH(fixed);
  addCommon(fixed);
  auto* hilbert = app.add_subcommand("hilbert", "Poincare series, dimension and fixed-point count");
  addH(hilbert);
  addCommon(hilbert);
  auto* enumerate = app.add_subcommand("enumerate", "List all Hessenberg functions for n");
  addN(enumerate);
  addCommon(enumerate);
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  addCommon(verify);
  verify->add_option("--suite", cfg.suites, "Suite names or 'all' (repeat or separate with commas)")
      ->delimiter(',')
      ->default_val(std::vector<std::string>{"all"});
  verify->add_option("--n-max", cfg.nMax, "Upper bound on n for every sweep")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_flag("--no-timing", cfg.noTiming, "Omit timing fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }

  std::unique_ptr<hc_session, decltype(&hc_session_free)> session(hc_session_new(), hc_session_free);
  if (!session) {
    std::cerr << "hesscoh: out of memory\n";
    return hc_status_exit_code(HC_INTERNAL);
  }
  hc_session* s = session.get();

  try {
    hc_status st = configure(s, cfg);
    if (st != HC_OK) return finish(s, st, cfg);

    std::vector<int> h = parseValues(cfg.h);
    if (*present) {
      st = hc_present(s, h.data(), h.size());
    } else if (*generators) {
      st = hc_generators(s, cfg.n);
    } else if (*fixed) {
      st = hc_fixed_points(s, h.data(), h.size());
    } else if (*hilbert) {
      st = hc_hilbert(s, h.data(), h.size());
    } else if (*enumerate) {
      st = hc_enumerate(s, cfg.n);
    } else {
      std::vector<const char*> names;
      for (const auto& name : cfg.suites) names.push_back(name.c_str());
      st = hc_verify(s, names.data(), names.size());
    }
    return finish(s, st, cfg);
  } catch (const UsageError& e) {
    std::cerr << "hesscoh: " << e.message << "\n";
    return kUsageExit;
  }
}
