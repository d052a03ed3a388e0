// harmonid: catalog listing, verification sweeps, derivative and gamma checks, benchmark.
//
// Exit status: 0 all checks passed, 1 at least one failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "harmonid/catalog.hpp"
#include "harmonid/error.hpp"
#include "harmonid/harness.hpp"

namespace {

using namespace harmonid;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kGammaIds = {"dougall_5f4", "dixon_3f2", "dixonlike_3f2", "whipple",
                                            "whipple_shifted", "whipple_like", "kummer"};

struct Output {
  std::string format = "table";
  std::string path;
  bool timing = false;
};

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) {
    throw UsageError("cannot open output file: " + out.path);
  }
  f << text;
}

std::string render(const std::vector<VerificationReport>& reports, const SweepConfig& cfg, const Output& out) {
  if (out.format == "json") {
    return to_json(reports, cfg, out.timing);
  }
  if (out.format == "csv") {
    return to_csv(reports, out.timing);
  }
  return to_table(reports, out.timing);
}

std::string signature(const IdentitySpec& spec) {
  std::string s;
  for (const auto& p : spec.params()) {
    if (!s.empty()) {
      s += ", ";
    }
    s += p.name + ":" + std::string(to_string(p.kind));
  }
  return s;
}

std::string list_catalog(const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& e : catalog_entries()) {
      nlohmann::ordered_json params = nlohmann::ordered_json::array();
      for (const auto& p : e.params()) {
        params.push_back({{"name", p.name}, {"kind", to_string(p.kind)}});
      }
      list.push_back({{"id", e.id}, {"params", params}, {"anchor", e.anchor}, {"mode", to_string(e.mode())}});
    }
    return list.dump(2) + "\n";
  }
  std::string text;
  for (const auto& e : catalog_entries()) {
    text += e.id + "\t" + std::string(to_string(e.mode())) + "\t(" + signature(e) + ")\t" + e.anchor + "\n";
  }
  return text;
}

void add_sweep_options(CLI::App* cmd, SweepConfig& cfg) {
  cmd->add_option("--n-max", cfg.n_max, "largest index n (or k)")->capture_default_str();
  cmd->add_option("--p-max", cfg.p_max, "largest p")->capture_default_str();
  cmd->add_option("--q-max", cfg.q_max, "largest q")->capture_default_str();
  cmd->add_option("--samples", cfg.rational_samples, "rational samples per grid point / float points")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "random seed")->envname("HARMONID_SEED")->capture_default_str();
  cmd->add_option("--num-bound", cfg.numerator_bound, "sampled numerator bound")->capture_default_str();
  cmd->add_option("--den-bound", cfg.denominator_bound, "sampled denominator bound")->capture_default_str();
  cmd->add_option("--tol", cfg.float_tol, "relative tolerance for float checks")->capture_default_str();
  cmd->add_option("--max-terms", cfg.max_terms, "series term cap for float checks")->capture_default_str();
  cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)")->capture_default_str();
}

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "write to file instead of standard output");
  cmd->add_flag("--timing", out.timing, "include wall times (makes output run-dependent)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and floating verification of harmonic-number summation identities"};
  app.require_subcommand(1);

  SweepConfig cfg;
  Output out;
  std::vector<std::string> ids;
  bool all = false;

  auto* list = app.add_subcommand("list", "list the identity catalog");
  std::string list_format = "table";
  list->add_option("--format", list_format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification sweeps");
  auto* all_flag = verify->add_flag("--all", all, "verify every catalog entry");
  verify->add_option("--id", ids, "identity id (repeatable)")->excludes(all_flag);
  add_sweep_options(verify, cfg);
  add_output_options(verify, out);

  auto* derivcheck = app.add_subcommand("derivcheck", "jet derivative rules for binomials and harmonic numbers");
  unsigned s_max = 10;
  unsigned h_max = 15;
  unsigned ell_max = 3;
  derivcheck->add_option("--samples", cfg.rational_samples)->capture_default_str();
  derivcheck->add_option("--seed", cfg.seed)->envname("HARMONID_SEED")->capture_default_str();
  derivcheck->add_option("--num-bound", cfg.numerator_bound)->capture_default_str();
  derivcheck->add_option("--den-bound", cfg.denominator_bound)->capture_default_str();
  derivcheck->add_option("--s-max", s_max)->capture_default_str();
  derivcheck->add_option("--h-max", h_max)->capture_default_str();
  derivcheck->add_option("--ell-max", ell_max)->capture_default_str();

  auto* gammacheck = app.add_subcommand("gammacheck", "gamma-form identities: float and terminating tracks");
  add_sweep_options(gammacheck, cfg);
  add_output_options(gammacheck, out);

  auto* bench = app.add_subcommand("bench", "per-term versus incremental terminating series");
  std::vector<unsigned> grid = {10, 50, 100, 200};
  std::string bench_format = "table";
  bench->add_option("--grid", grid, "series lengths")->capture_default_str();
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*list) {
      std::cout << list_catalog(list_format);
      return EXIT_SUCCESS;
    }
    if (*verify) {
      if (!all && ids.empty()) {
        throw UsageError("verify needs --all or at least one --id");
      }
      const auto reports = run_all(cfg, all ? std::vector<std::string>{} : ids);
      emit(out, render(reports, cfg, out));
      return all_passed(reports) ? EXIT_SUCCESS : kExitFail;
    }
    if (*gammacheck) {
      const auto reports = run_all(cfg, kGammaIds);
      emit(out, render(reports, cfg, out));
      return all_passed(reports) ? EXIT_SUCCESS : kExitFail;
    }
    if (*derivcheck) {
      const auto r = run_derivative_checks(cfg, s_max, h_max, ell_max);
      std::cout << "binomial rule: " << r.binom_passed << "/" << r.binom_total << "\n"
                << "harmonic rule: " << r.harmonic_passed << "/" << r.harmonic_total << "\n";
      for (const auto& f : r.failures) {
        std::cout << "  FAIL " << f << "\n";
      }
      return r.ok() ? EXIT_SUCCESS : kExitFail;
    }
    if (*bench) {
      const auto rows = bench_series(grid);
      std::cout << (bench_format == "json" ? bench_to_json(rows) : bench_to_table(rows));
      bool ok = true;
      for (const auto& r : rows) {
        ok = ok && r.equal;
      }
      return ok ? EXIT_SUCCESS : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SamplingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
