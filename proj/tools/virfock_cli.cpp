// Command line front end; talks to the library exclusively through the
// C interface in virfock.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "virfock.h"

namespace {

struct Options {
  long energy_cutoff = 48;
  long q_order = 60;
  int z_window = 6;
  int mode_window = 4;
  std::optional<std::string> lambda_text;
  std::optional<std::string> b_text;
  std::optional<int> sector;
  int max_level = 9;
  int j_max = 4;
  int discrete_max_m = 4;
  std::string format = "plain";
  std::string out_path;
};

int run_command(const std::string& command, const Options& opt) {
  nlohmann::json cfg;
  cfg["command"] = command;
  cfg["energy_cutoff"] = opt.energy_cutoff;
  cfg["q_order"] = opt.q_order;
  cfg["z_window"] = opt.z_window;
  cfg["mode_window"] = opt.mode_window;
  if (opt.lambda_text) cfg["lambda"] = *opt.lambda_text;
  if (opt.b_text) cfg["b"] = *opt.b_text;
  if (opt.sector) cfg["sector"] = *opt.sector;
  cfg["max_level"] = opt.max_level;
  cfg["j_max"] = opt.j_max;
  cfg["discrete_max_m"] = opt.discrete_max_m;
  cfg["format"] = opt.format;

  char* report = nullptr;
  int verdict = 0;
  int rc = vf_run(cfg.dump().c_str(), &report, &verdict);
  if (rc != VF_OK) {
    std::cerr << "error: " << vf_last_error() << "\n";
    return 2;
  }
  if (opt.out_path.empty()) {
    std::cout << report;
    if (*report && report[std::string(report).size() - 1] != '\n')
      std::cout << "\n";
  } else {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << opt.out_path << "\n";
      vf_string_free(report);
      return 2;
    }
    f << report;
  }
  vf_string_free(report);
  return verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact verification suite for the neutral fermion Fock space and its "
      "Virasoro module structures"};
  app.require_subcommand(1);

  Options opt;
  std::string lambda_in, b_in;
  int sector_in = 0;

  auto add_common = [&](CLI::App* sub, bool with_params) {
    sub->add_option("--energy-cutoff", opt.energy_cutoff,
                    "basis energy cutoff, quarter units")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--q-order", opt.q_order,
                    "series truncation order, quarter units")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--z-window", opt.z_window, "charge variable window")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--mode-window", opt.mode_window,
                    "mode index window for bracket sweeps")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", opt.format, "plain, json, or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_option("--out", opt.out_path, "write the report to a file");
    if (with_params) {
      auto* lo = sub->add_option("--lambda", lambda_in,
                                 "field weight, e.g. 1/2 or 0+1/3*sqrt(2)");
      auto* bo = sub->add_option("--b", b_in, "background charge parameter");
      auto* so = sub->add_option("--sector", sector_in, "charge sector");
      sub->callback([&, lo, bo, so] {
        if (lo->count()) opt.lambda_text = lambda_in;
        if (bo->count()) opt.b_text = b_in;
        if (so->count()) opt.sector = sector_in;
      });
    }
    return sub;
  };

  add_common(app.add_subcommand("verify-clifford",
                                "anticommutation relations and gradings"),
             false);
  add_common(app.add_subcommand("verify-heisenberg",
                                "bilinear mode brackets and charge grading"),
             false);
  auto* vv = add_common(
      app.add_subcommand("verify-virasoro",
                         "Virasoro brackets with exact central terms"),
      true);
  (void)vv;
  add_common(app.add_subcommand("verify-identities",
                                "relations between the operator families"),
             false);
  add_common(app.add_subcommand("char",
                                "two-variable characters: trace vs product "
                                "and sum forms"),
             false);
  add_common(app.add_subcommand("jacobi", "triple product identity check"),
             false);
  auto* sg = add_common(
      app.add_subcommand("singular", "singular vector kernels per level"),
      true);
  sg->add_option("--max-level", opt.max_level, "highest level to scan")
      ->check(CLI::PositiveNumber);
  sg->add_option("--j-max", opt.j_max, "annihilation modes L_1..L_jmax")
      ->check(CLI::PositiveNumber);
  auto* dc = add_common(
      app.add_subcommand("decompose",
                         "charge sector decomposition into c=1 modules"),
      true);
  (void)dc;
  auto* ds = add_common(
      app.add_subcommand("discrete",
                         "unitary minimal model parameters on the weight "
                         "lattice"),
      false);
  ds->add_option("--max-m", opt.discrete_max_m, "largest series level m")
      ->check(CLI::NonNegativeNumber);

  CLI11_PARSE(app, argc, argv);

  return run_command(app.get_subcommands().front()->get_name(), opt);
}
