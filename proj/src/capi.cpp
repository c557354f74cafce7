#include "fraclab.h"

#include "fraclab/errors.hpp"
#include "fraclab/experiments.hpp"
#include "fraclab/levy.hpp"
#include "fraclab/runners.hpp"
#include "fraclab/spectral.hpp"
#include "fraclab/tails.hpp"

#include <cstring>
#include <string>

namespace {

thread_local std::string g_last_error;

void copy_out(const std::string& s, char* buf, size_t len) {
  if (!buf || len == 0) return;
  const size_t n = std::min(s.size(), len - 1);
  std::memcpy(buf, s.data(), n);
  buf[n] = '\0';
}

flb_status fail(flb_status code, const std::string& what) {
  g_last_error = what;
  return code;
}

template <typename F>
flb_status guard(F&& f) {
  try {
    f();
    return FLB_OK;
  } catch (const fraclab::ConfigError& e) {
    return fail(FLB_ERR_CONFIG, e.what());
  } catch (const fraclab::DegenerateInputError& e) {
    return fail(FLB_ERR_DOMAIN, e.what());
  } catch (const fraclab::SingularityError& e) {
    return fail(FLB_ERR_DOMAIN, e.what());
  } catch (const fraclab::BudgetError& e) {
    return fail(FLB_ERR_BUDGET, e.what());
  } catch (const fraclab::QuadratureError& e) {
    return fail(FLB_ERR_NUMERIC, e.what());
  } catch (const fraclab::NonconvergenceError& e) {
    return fail(FLB_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(FLB_ERR_INTERNAL, e.what());
  }
}

fraclab::SpectralParams params(double B, double gamma) {
  fraclab::SpectralParams p{B, gamma, std::nullopt};
  p.validate();
  return p;
}

flb_status check_out(const void* out) {
  return out ? FLB_OK : fail(FLB_ERR_CONFIG, "null output pointer");
}

}  // namespace

extern "C" {

const char* flb_version(void) { return "0.1.0"; }

const char* flb_last_error(void) { return g_last_error.c_str(); }

flb_status flb_omega(double B, double gamma, double k, int branch,
                     double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard([&] { *out = fraclab::omega(params(B, gamma), k, branch); });
}

flb_status flb_theta_sq(double B, double gamma, double k, int branch,
                        double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard([&] { *out = fraclab::theta_sq(params(B, gamma), k, branch); });
}

flb_status flb_group_velocity(double B, double gamma, double k, double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard([&] { *out = fraclab::group_velocity(params(B, gamma), k); });
}

flb_status flb_lambda(double B, double gamma, double k, int branch,
                      double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard(
      [&] { *out = fraclab::lambda_holding(params(B, gamma), {k, branch}); });
}

flb_status flb_psi(double B, double gamma, double k, int branch, double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard(
      [&] { *out = fraclab::psi_flight(params(B, gamma), {k, branch}); });
}

flb_status flb_pi_density(double B, double gamma, double k, int branch,
                          double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard(
      [&] { *out = fraclab::pi_density(params(B, gamma), {k, branch}); });
}

flb_status flb_solve_x(int branch_plus, double B, double gamma, double r,
                       double* x, double* xprime) {
  if (check_out(x)) return FLB_ERR_CONFIG;
  return guard([&] {
    const auto root = fraclab::solve_x(
        branch_plus ? fraclab::Branch::plus : fraclab::Branch::minus, B, gamma,
        r);
    *x = root.x;
    if (xprime) *xprime = root.xprime;
  });
}

flb_status flb_density_g(int branch_plus, double B, double gamma, double r,
                         double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard([&] {
    *out = fraclab::density_g(
        branch_plus ? fraclab::Branch::plus : fraclab::Branch::minus, B, gamma,
        r);
  });
}

flb_status flb_scaled_tail_theory(double B, double gamma, double delta,
                                  double r, double* out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard(
      [&] { *out = fraclab::scaled_tail_theory(B, gamma, delta, r); });
}

struct flb_exponent {
  fraclab::LevyExponent impl;
};

flb_status flb_exponent_create(double delta, double B, double gamma,
                               flb_exponent** out) {
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard([&] {
    fraclab::Regime regime = delta > 0.5   ? fraclab::Regime::delta_gt_half
                             : delta == 0.5 ? fraclab::Regime::delta_eq_half
                                            : fraclab::Regime::delta_lt_half;
    *out = new flb_exponent{
        fraclab::LevyExponent(fraclab::LevyMeasureSpec::make(regime, B, gamma))};
  });
}

void flb_exponent_destroy(flb_exponent* e) { delete e; }

flb_status flb_exponent_phi(const flb_exponent* e, double theta, double* out) {
  if (!e) return fail(FLB_ERR_CONFIG, "null exponent handle");
  if (check_out(out)) return FLB_ERR_CONFIG;
  return guard([&] { *out = e->impl.phi_fast(theta); });
}

flb_status flb_run_criterion(int id, unsigned long long seed, int* pass,
                             char* detail_buf, size_t detail_len) {
  if (check_out(pass)) return FLB_ERR_CONFIG;
  return guard([&] {
    const fraclab::CriterionResult res = fraclab::run_criterion(id, seed);
    *pass = res.pass ? 1 : 0;
    copy_out(res.detail, detail_buf, detail_len);
  });
}

flb_status flb_run(const char* subcommand, const char* config_text,
                   const char* out_dir, unsigned long long seed, char* msg_buf,
                   size_t msg_len) {
  if (!subcommand || !config_text)
    return fail(FLB_ERR_CONFIG, "null subcommand or config text");
  fraclab::RunOptions opts;
  opts.subcommand = subcommand;
  opts.config_text = config_text;
  opts.out_dir = out_dir ? out_dir : ".";
  opts.seed = seed;
  const fraclab::RunOutcome out = fraclab::run_subcommand(opts);
  copy_out(out.message, msg_buf, msg_len);
  if (out.exit_code != 0) g_last_error = out.message;
  switch (out.exit_code) {
    case 0: return FLB_OK;
    case 3: return FLB_ERR_TOLERANCE;
    case 4: return FLB_ERR_BUDGET;
    default: return FLB_ERR_CONFIG;
  }
}

}  // extern "C"
