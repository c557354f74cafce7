#include "fraclab/runners.hpp"

#include "fraclab/errors.hpp"
#include "fraclab/experiments.hpp"
#include "fraclab/levy.hpp"
#include "fraclab/pde.hpp"
#include "fraclab/spectral.hpp"
#include "fraclab/tails.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fraclab {

using json = nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(lineno) +
                          ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) +
                        ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) +
                                       ": empty key");
    if (!section.empty()) key = section + "." + key;
    cfg[key] = val;
  }
  return cfg;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace {

using Config = std::map<std::string, std::string>;

double to_double(const std::string& key, const std::string& val) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(val, &pos);
    if (pos != val.size()) throw std::invalid_argument(val);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': not a number: " + val);
  }
}

double get_req(const Config& cfg, const std::string& key) {
  const auto it = cfg.find(key);
  if (it == cfg.end())
    throw ConfigError("missing required config key '" + key + "'");
  return to_double(key, it->second);
}

double get_opt(const Config& cfg, const std::string& key, double dflt) {
  const auto it = cfg.find(key);
  return it == cfg.end() ? dflt : to_double(key, it->second);
}

std::uint64_t get_opt_u(const Config& cfg, const std::string& key,
                        std::uint64_t dflt) {
  const double v = get_opt(cfg, key, static_cast<double>(dflt));
  if (v < 0.0 || v != std::floor(v))
    throw ConfigError("config key '" + key + "': not a nonneg integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<double> split_list(const std::string& key, const std::string& val) {
  std::vector<double> out;
  std::istringstream in(val);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(to_double(key, tok));
  }
  if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
  return out;
}

std::vector<double> get_list(const Config& cfg, const std::string& key,
                             const std::string& dflt) {
  const auto it = cfg.find(key);
  return split_list(key, it == cfg.end() ? dflt : it->second);
}

std::vector<double> get_list_req(const Config& cfg, const std::string& key) {
  const auto it = cfg.find(key);
  if (it == cfg.end())
    throw ConfigError("missing required config key '" + key + "'");
  return split_list(key, it->second);
}

std::string iso_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

struct Emitter {
  std::filesystem::path dir;
  std::vector<std::string> outputs;

  void write_text(const std::string& name, const std::string& body) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write output file " + name);
    out << body;
    outputs.push_back(name);
  }
  void write_csv(const std::string& name,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream body;
    for (std::size_t j = 0; j < header.size(); ++j)
      body << (j ? "," : "") << header[j];
    body << "\n";
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j)
        body << (j ? "," : "") << row[j];
      body << "\n";
    }
    write_text(name, body.str());
  }
  void write_json(const std::string& name, const json& j) {
    write_text(name, j.dump(2) + "\n");
  }
};

// builds the hydro/charfn/clock configs from flat keys
CharfnConfig charfn_config(const Config& cfg, std::uint64_t seed) {
  CharfnConfig c;
  c.B = get_req(cfg, "B");
  c.gamma = get_req(cfg, "gamma");
  c.delta = get_req(cfg, "delta");
  c.N_list = cfg.count("N_list") ? get_list_req(cfg, "N_list")
                                 : std::vector<double>{get_req(cfg, "N")};
  c.t = get_opt(cfg, "t", 1.0);
  c.u = get_opt(cfg, "u", 0.0);
  c.theta = get_list(cfg, "theta", "0.5,1,2");
  c.M = get_opt_u(cfg, "M", 10000);
  c.M_y = get_opt_u(cfg, "M_y", 0);
  c.seed = seed;
  c.start = {get_opt(cfg, "start_k", 0.3),
             static_cast<int>(get_opt(cfg, "start_i", 1))};
  c.allowance = get_opt(cfg, "allowance", 0.02);
  c.prefactor = get_opt(cfg, "prefactor", 0.0);
  return c;
}

ClockConfig clock_config(const Config& cfg, std::uint64_t seed) {
  ClockConfig c;
  c.B = get_req(cfg, "B");
  c.gamma = get_req(cfg, "gamma");
  c.delta = get_req(cfg, "delta");
  c.N_list = cfg.count("N_list") ? get_list_req(cfg, "N_list")
                                 : std::vector<double>{get_req(cfg, "N")};
  c.t0 = get_opt(cfg, "t0", 0.1);
  c.T = get_opt(cfg, "T", 1.0);
  c.eps = get_opt(cfg, "eps", 0.1);
  c.M = get_opt_u(cfg, "M", 1000);
  c.seed = seed;
  c.start = {get_opt(cfg, "start_k", 0.3),
             static_cast<int>(get_opt(cfg, "start_i", 1))};
  return c;
}

HydroConfig hydro_config(const Config& cfg, std::uint64_t seed) {
  HydroConfig c;
  c.B = get_req(cfg, "B");
  c.gamma = get_req(cfg, "gamma");
  c.delta = get_req(cfg, "delta");
  c.N = get_req(cfg, "N");
  c.t = get_opt(cfg, "t", 0.5);
  c.u = get_opt(cfg, "u", 0.0);
  c.M = get_opt_u(cfg, "M", 10000);
  c.seed = seed;
  c.start = {get_opt(cfg, "start_k", 0.3),
             static_cast<int>(get_opt(cfg, "start_i", 1))};
  c.start2 = {get_opt(cfg, "start2_k", 0.1),
              static_cast<int>(get_opt(cfg, "start2_i", 2))};
  c.moll_lambda = get_opt(cfg, "moll_lambda", 1.0);
  c.moll_r = get_opt(cfg, "moll_r", 1.0);
  c.k_amp = get_opt(cfg, "k_amp", 0.0);
  c.L = get_opt(cfg, "L", 64.0);
  c.n_points = static_cast<int>(get_opt(cfg, "n_points", 16384));
  c.allowance = get_opt(cfg, "allowance", 0.02);
  c.M_k = get_opt_u(cfg, "M_k", 0);
  c.k_grid = static_cast<int>(get_opt(cfg, "k_grid", 33));
  return c;
}

Regime regime_from_delta(double delta) {
  if (delta > 0.5) return Regime::delta_gt_half;
  if (delta == 0.5) return Regime::delta_eq_half;
  return Regime::delta_lt_half;
}

int run_spectral_table(const Config& cfg, Emitter& em, std::string& msg) {
  SpectralParams p{get_req(cfg, "B"), get_req(cfg, "gamma"), std::nullopt};
  if (cfg.count("delta") || cfg.count("N"))
    p.scaling = Scaling{get_req(cfg, "delta"), get_req(cfg, "N")};
  p.validate();
  const int n = static_cast<int>(get_opt(cfg, "k_points", 512));
  if (n < 2) throw ConfigError("k_points must be >= 2");
  std::vector<std::vector<std::string>> rows;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 0; j < n; ++j) {
      const double k = -0.5 + (j + 0.5) / n;
      rows.push_back({format_double(k), std::to_string(i),
                      format_double(omega(p, k, i)),
                      format_double(theta_sq(p, k, i)),
                      format_double(group_velocity(p, k)),
                      format_double(lambda_holding(p, {k, i})),
                      format_double(psi_flight(p, {k, i})),
                      format_double(pi_density(p, {k, i}))});
    }
  }
  em.write_csv("spectral_table.csv",
               {"k", "i", "omega", "theta_sq", "velocity", "lambda", "psi",
                "pi_density"},
               rows);
  msg = "spectral table: " + std::to_string(rows.size()) + " rows";
  return 0;
}

int run_tails(const Config& cfg, Emitter& em, std::string& msg) {
  const double B = get_req(cfg, "B");
  const double gamma = get_req(cfg, "gamma");
  const double delta = get_req(cfg, "delta");
  const std::vector<double> N_list =
      cfg.count("N_list") ? get_list_req(cfg, "N_list")
                          : std::vector<double>{get_req(cfg, "N")};
  const std::vector<double> r_grid = get_list(cfg, "r_grid", "0.5,1,2");
  const TailReport rep = scaled_tail_limit(B, gamma, delta, r_grid, N_list);
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : rep.rows)
    rows.push_back({format_double(row.N), format_double(row.r),
                    format_double(row.tail), format_double(row.scaled),
                    format_double(row.theory), format_double(row.rel_err)});
  em.write_csv("tails.csv", {"N", "r", "tail", "scaled", "theory", "rel_err"},
               rows);
  msg = "tail report: " + std::to_string(rows.size()) + " rows";
  return 0;
}

int run_levy_exponent(const Config& cfg, Emitter& em, std::string& msg) {
  const double B = get_req(cfg, "B");
  const double gamma = get_req(cfg, "gamma");
  const double delta = get_req(cfg, "delta");
  const double lo = get_opt(cfg, "theta_min", 1e-2);
  const double hi = get_opt(cfg, "theta_max", 1e2);
  const int n = static_cast<int>(get_opt(cfg, "theta_points", 41));
  if (!(lo > 0.0) || !(hi > lo) || n < 2)
    throw ConfigError("need 0 < theta_min < theta_max and theta_points >= 2");
  const LevyExponent e(
      LevyMeasureSpec::make(regime_from_delta(delta), B, gamma));
  std::vector<std::vector<std::string>> rows;
  for (int j = 0; j < n; ++j) {
    const double th =
        lo * std::pow(hi / lo, static_cast<double>(j) / (n - 1));
    rows.push_back({format_double(th), format_double(e.phi(th)),
                    format_double(e.phi_fast(th))});
  }
  em.write_csv("levy_exponent.csv", {"theta", "phi_quad", "phi_fast"}, rows);
  msg = "levy exponent: " + std::to_string(n) + " points";
  return 0;
}

int run_pde_limit(const Config& cfg, Emitter& em, std::string& msg) {
  const double gamma = get_req(cfg, "gamma");
  const double L = get_opt(cfg, "L", 64.0);
  const int n = static_cast<int>(get_opt(cfg, "n_points", 16384));
  const double ml = get_opt(cfg, "moll_lambda", 1.0);
  const double mr = get_opt(cfg, "moll_r", 1.0);
  const double t_max = get_opt(cfg, "t_max", 1.0);
  const int tn = static_cast<int>(get_opt(cfg, "t_points", 11));
  if (tn < 2 || !(t_max > 0.0))
    throw ConfigError("need t_points >= 2 and t_max > 0");
  const std::vector<double> Bz =
      get_list(cfg, "B_to_zero", "1,0.1,0.01,0.001,0.0001");
  const std::vector<double> Bi = get_list(cfg, "B_to_inf", "1,10,100,1000,10000");
  const GridProfile f0 = make_mollifier(L, n, ml, mr);
  std::vector<double> t_grid(tn);
  for (int j = 0; j < tn; ++j) t_grid[j] = t_max * j / (tn - 1);
  const InterpolationStudy study =
      interpolation_limit_study(Bz, Bi, gamma, f0, t_grid);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : study.to_zero)
    rows.push_back({"to_zero", format_double(r.B), format_double(r.distance),
                    format_double(r.ref_norm)});
  for (const auto& r : study.to_inf)
    rows.push_back({"to_inf", format_double(r.B), format_double(r.distance),
                    format_double(r.ref_norm)});
  em.write_csv("pde_limit.csv", {"side", "B", "distance", "ref_norm"}, rows);
  msg = "interpolation study: " + std::to_string(rows.size()) + " rows";
  return 0;
}

int run_mc_charfn(const Config& cfg, Emitter& em, std::uint64_t seed,
                  std::string& msg) {
  const CharfnReport rep = charfn_convergence(charfn_config(cfg, seed));
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  bool all_pass = true;
  for (const auto& r : rep.rows) {
    rows.push_back({std::string(1, r.variant), format_double(r.N),
                    format_double(r.theta), format_double(r.est_re),
                    format_double(r.est_im), format_double(r.ci),
                    format_double(r.theory), r.pass ? "1" : "0"});
    jrows.push_back({{"variant", std::string(1, r.variant)},
                     {"N", r.N},
                     {"theta", r.theta},
                     {"est_re", r.est_re},
                     {"est_im", r.est_im},
                     {"ci", r.ci},
                     {"theory", r.theory},
                     {"pass", r.pass}});
    all_pass = all_pass && r.pass;
  }
  em.write_csv("mc_charfn.csv",
               {"variant", "N", "theta", "est_re", "est_im", "ci", "theory",
                "pass"},
               rows);
  em.write_json("mc_charfn.json",
                {{"allowance", rep.config.allowance}, {"rows", jrows}});
  msg = all_pass ? "all characteristic-function rows within interval"
                 : "some characteristic-function rows outside interval";
  return all_pass ? 0 : 3;
}

int run_mc_clock(const Config& cfg, Emitter& em, std::uint64_t seed,
                 std::string& msg) {
  const ClockReport rep = clock_convergence(clock_config(cfg, seed));
  std::vector<std::vector<std::string>> rows;
  json jrows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({format_double(r.N), format_double(r.exceed_prob),
                    format_double(r.ci), format_double(r.mean_S_end),
                    format_double(r.sd_mean), r.pass ? "1" : "0"});
    jrows.push_back({{"N", r.N},
                     {"exceed_prob", r.exceed_prob},
                     {"ci", r.ci},
                     {"mean_S_end", r.mean_S_end},
                     {"sd_mean", r.sd_mean},
                     {"pass", r.pass}});
  }
  em.write_csv("mc_clock.csv",
               {"N", "exceed_prob", "ci", "mean_S_end", "sd_mean", "pass"},
               rows);
  em.write_json("mc_clock.json",
                {{"threshold", rep.threshold}, {"rows", jrows}});
  const bool ok = rep.rows.back().pass;
  msg = ok ? "clock exceedance below threshold at largest N"
           : "clock exceedance above threshold at largest N";
  return ok ? 0 : 3;
}

int run_mc_hydro(const Config& cfg, Emitter& em, std::uint64_t seed,
                 std::string& msg) {
  const HydroReport rep = hydro_limit_f(hydro_config(cfg, seed));
  json jest = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : rep.estimates) {
    jest.push_back({{"start_k", e.start.k},
                    {"start_i", e.start.i},
                    {"estimate", e.estimate},
                    {"ci", e.ci}});
    rows.push_back({format_double(e.start.k), std::to_string(e.start.i),
                    format_double(e.estimate), format_double(e.ci),
                    format_double(rep.theory)});
  }
  json j = {{"theory", rep.theory},
            {"allowance", rep.config.allowance},
            {"estimates", jest},
            {"pass", rep.pass},
            {"pass_indep", rep.pass_indep}};
  if (rep.config.M_k > 0) {
    j["k_l1"] = rep.k_l1;
    j["k_l1_refined"] = rep.k_l1_refined;
    j["k_l2"] = rep.k_l2;
    j["k_l2_refined"] = rep.k_l2_refined;
  }
  em.write_csv("mc_hydro.csv",
               {"start_k", "start_i", "estimate", "ci", "theory"}, rows);
  em.write_json("mc_hydro.json", j);
  const bool ok = rep.pass && rep.pass_indep;
  msg = ok ? "hydrodynamic estimates within interval of the PDE value"
           : "hydrodynamic estimates outside interval of the PDE value";
  return ok ? 0 : 3;
}

int run_verify_all(const Config& cfg, Emitter& em, std::uint64_t seed,
                   std::string& msg) {
  std::vector<double> ids_d =
      get_list(cfg, "criteria", "1,2,3,4,5,6,7,8,9,10");
  json jrows = json::array();
  std::ostringstream lines;
  bool all_pass = true;
  for (double idd : ids_d) {
    const int id = static_cast<int>(idd);
    const CriterionResult res = run_criterion(id, seed);
    lines << "criterion " << id << ": " << (res.pass ? "PASS" : "FAIL") << " ("
          << res.detail << ")\n";
    jrows.push_back({{"id", id}, {"pass", res.pass}, {"detail", res.detail}});
    all_pass = all_pass && res.pass;
  }
  em.write_json("verify_all.json", {{"criteria", jrows}, {"pass", all_pass}});
  msg = lines.str() + (all_pass ? "all criteria passed" : "criteria failed");
  return all_pass ? 0 : 3;
}

}  // namespace

RunOutcome run_subcommand(const RunOptions& options) {
  RunOutcome out;
  const std::string started = iso_now();
  try {
    const Config cfg = parse_config(options.config_text);
    Emitter em;
    em.dir = options.out_dir.empty() ? "." : options.out_dir;
    std::filesystem::create_directories(em.dir);

    if (options.subcommand == "spectral-table")
      out.exit_code = run_spectral_table(cfg, em, out.message);
    else if (options.subcommand == "tails")
      out.exit_code = run_tails(cfg, em, out.message);
    else if (options.subcommand == "levy-exponent")
      out.exit_code = run_levy_exponent(cfg, em, out.message);
    else if (options.subcommand == "pde-limit")
      out.exit_code = run_pde_limit(cfg, em, out.message);
    else if (options.subcommand == "mc-charfn")
      out.exit_code = run_mc_charfn(cfg, em, options.seed, out.message);
    else if (options.subcommand == "mc-clock")
      out.exit_code = run_mc_clock(cfg, em, options.seed, out.message);
    else if (options.subcommand == "mc-hydro")
      out.exit_code = run_mc_hydro(cfg, em, options.seed, out.message);
    else if (options.subcommand == "verify-all")
      out.exit_code = run_verify_all(cfg, em, options.seed, out.message);
    else
      throw ConfigError("unknown subcommand '" + options.subcommand + "'");

    json manifest = {{"subcommand", options.subcommand},
                     {"config_digest", fnv1a_hex(options.config_text)},
                     {"seed", options.seed},
                     {"version", "0.1.0"},
                     {"started_at", started},
                     {"finished_at", iso_now()},
                     {"outputs", em.outputs}};
    em.write_json("manifest.json", manifest);
    out.outputs = em.outputs;
  } catch (const BudgetError& e) {
    out.exit_code = 4;
    out.message = e.what();
  } catch (const InsufficientTrajectoryError& e) {
    out.exit_code = 4;
    out.message = e.what();
  } catch (const QuadratureError& e) {
    out.exit_code = 3;
    out.message = e.what();
  } catch (const NonconvergenceError& e) {
    out.exit_code = 3;
    out.message = e.what();
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.message = e.what();
  }
  return out;
}

}  // namespace fraclab
