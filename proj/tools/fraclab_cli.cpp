// fraclab command-line tool: thin front end over the C API. Builds a flat
// key/value config from an optional file plus flag overrides and hands it to
// flb_run; exit codes 0 (ok), 2 (config), 3 (tolerance), 4 (budget).

#include "fraclab.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CommonArgs {
  std::string config_file;
  std::string out_dir;
  unsigned long long seed = 1;
  int threads = 1;  // accepted for interface stability; results are invariant
  std::vector<std::string> sets;
  // convenience physical flags; stored as strings so "unset" is detectable
  std::string B, gamma, delta, N, N_list, t, theta, M, eps, criteria;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--config", a.config_file, "flat key/value config file");
  cmd->add_option("--out", a.out_dir, "output directory");
  cmd->add_option("--seed", a.seed, "master RNG seed");
  cmd->add_option("--threads", a.threads,
                  "worker count (results do not depend on it)");
  cmd->add_option("--set", a.sets, "extra key=value override (repeatable)");
  cmd->add_option("--B", a.B, "field intensity B");
  cmd->add_option("--gamma", a.gamma, "noise intensity gamma");
  cmd->add_option("--delta", a.delta, "field scaling exponent delta");
  cmd->add_option("--N", a.N, "scaling parameter N");
  cmd->add_option("--N-list", a.N_list, "comma-separated N values");
  cmd->add_option("--t", a.t, "evaluation time t");
  cmd->add_option("--theta", a.theta, "comma-separated theta grid");
  cmd->add_option("--M", a.M, "Monte-Carlo ensemble size");
  cmd->add_option("--eps", a.eps, "clock deviation threshold epsilon");
  cmd->add_option("--criteria", a.criteria,
                  "comma-separated criterion ids for verify-all");
}

int build_config(const CommonArgs& a, std::string& out_text) {
  std::ostringstream text;
  if (!a.config_file.empty()) {
    std::ifstream in(a.config_file, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read config file " << a.config_file << "\n";
      return 2;
    }
    text << in.rdbuf() << "\n";
  }
  auto put = [&text](const char* key, const std::string& val) {
    if (!val.empty()) text << key << " = " << val << "\n";
  };
  put("B", a.B);
  put("gamma", a.gamma);
  put("delta", a.delta);
  put("N", a.N);
  put("N_list", a.N_list);
  put("t", a.t);
  put("theta", a.theta);
  put("M", a.M);
  put("eps", a.eps);
  put("criteria", a.criteria);
  for (const std::string& kv : a.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --set expects key=value, got " << kv << "\n";
      return 2;
    }
    text << kv.substr(0, eq) << " = " << kv.substr(eq + 1) << "\n";
  }
  out_text = text.str();
  return 0;
}

int dispatch(const std::string& name, const CommonArgs& a) {
  std::string config;
  if (int rc = build_config(a, config)) return rc;
  std::string out_dir = a.out_dir;
  if (out_dir.empty()) {
    const char* env = std::getenv("FRACLAB_OUT");
    out_dir = env ? env : ".";
  }
  std::vector<char> msg(1 << 16);
  const flb_status st =
      flb_run(name.c_str(), config.c_str(), out_dir.c_str(), a.seed,
              msg.data(), msg.size());
  if (msg[0]) (st == FLB_OK ? std::cout : std::cerr) << msg.data() << "\n";
  if (st != FLB_OK && !*msg.data())
    std::cerr << "error: " << flb_last_error() << "\n";
  switch (st) {
    case FLB_OK: return 0;
    case FLB_ERR_TOLERANCE: return 3;
    case FLB_ERR_BUDGET: return 4;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fraclab: fractional-diffusion laboratory for the magnetized "
               "harmonic chain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", flb_version());

  const char* names[] = {"spectral-table", "tails",    "levy-exponent",
                         "pde-limit",      "mc-charfn", "mc-clock",
                         "mc-hydro",       "verify-all"};
  const char* descs[] = {
      "dispersion/velocity/holding/invariant-measure table",
      "scaled tail probabilities against the trichotomy limits",
      "Levy exponent Phi on a log theta grid",
      "interpolating-generator PDE limits B->0 and B->infinity",
      "Monte-Carlo characteristic functions of the scaled process",
      "clock law-of-large-numbers exceedance study",
      "hydrodynamic-limit comparison against the fractional PDE",
      "run the acceptance criteria"};

  std::vector<CommonArgs> args(8);
  for (int j = 0; j < 8; ++j) add_common(app.add_subcommand(names[j], descs[j]), args[j]);

  CLI11_PARSE(app, argc, argv);

  for (int j = 0; j < 8; ++j)
    if (app.get_subcommand(names[j])->parsed()) return dispatch(names[j], args[j]);
  return 2;
}
