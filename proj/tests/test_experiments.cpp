#include <doctest.h>

#include "fraclab/experiments.hpp"
#include "fraclab/levy.hpp"
#include "fraclab/mc.hpp"
#include "fraclab/pde.hpp"

#include <cmath>
#include <complex>

using namespace fraclab;

namespace {

CharfnConfig small_charfn() {
  CharfnConfig cfg;
  cfg.B = 1.0;
  cfg.gamma = 1.0;
  cfg.delta = 0.75;
  cfg.N_list = {1000.0};
  cfg.t = 1.0;
  cfg.theta = {0.5, 1.0};
  cfg.M = 100;
  cfg.seed = 404;
  return cfg;
}

}  // namespace

TEST_CASE("characteristic function estimates have modulus at most one") {
  const auto rep = charfn_convergence(small_charfn());
  REQUIRE(!rep.rows.empty());
  bool saw_z = false, saw_y = false;
  for (const auto& row : rep.rows) {
    CHECK(std::hypot(row.est_re, row.est_im) <= 1.0 + 1e-12);
    CHECK(row.theory > 0.0);
    CHECK(row.theory <= 1.0);
    saw_z = saw_z || row.variant == 'Z';
    saw_y = saw_y || row.variant == 'Y';
  }
  CHECK(saw_z);
  CHECK(saw_y);
}

TEST_CASE("theory columns come from the Levy exponent") {
  const auto cfg = small_charfn();
  const auto rep = charfn_convergence(cfg);
  const LevyExponent e(
      LevyMeasureSpec::make(Regime::delta_gt_half, cfg.B, cfg.gamma));
  for (const auto& row : rep.rows) {
    const double expect = row.variant == 'Z'
                              ? std::exp(cfg.t * e.phi_closed(row.theta))
                              : std::exp(cfg.t / (2.0 * cfg.gamma) *
                                         e.phi_closed(row.theta));
    CHECK(row.theory == doctest::Approx(expect).epsilon(1e-12));
    CHECK(row.ci == doctest::Approx(3.0 / std::sqrt((double)(
                        row.variant == 'Z' ? cfg.M : 100))));
  }
}

TEST_CASE("runs are deterministic in the master seed") {
  const auto a = charfn_convergence(small_charfn());
  const auto b = charfn_convergence(small_charfn());
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t j = 0; j < a.rows.size(); ++j) {
    CHECK(a.rows[j].est_re == b.rows[j].est_re);
    CHECK(a.rows[j].est_im == b.rows[j].est_im);
  }
}

TEST_CASE("centered estimates do not depend on the reference point u") {
  auto cfg = small_charfn();
  const auto a = charfn_convergence(cfg);
  cfg.u = 2.0;
  const auto b = charfn_convergence(cfg);
  for (std::size_t j = 0; j < a.rows.size(); ++j) {
    CHECK(a.rows[j].est_re == doctest::Approx(b.rows[j].est_re).epsilon(1e-13));
    CHECK(a.rows[j].est_im == doctest::Approx(b.rows[j].est_im).epsilon(1e-13));
  }
}

TEST_CASE("pass flags are stable across a seed sweep") {
  // the tolerance 3/sqrt(M) + allowance dominates the finite-N bias here, so
  // every seed must report pass on the Z rows
  auto cfg = small_charfn();
  for (std::uint64_t s = 1; s <= 20; ++s) {
    cfg.seed = s;
    const auto rep = charfn_convergence(cfg);
    for (const auto& row : rep.rows) {
      if (row.variant == 'Z') CHECK(row.pass);
    }
  }
}

TEST_CASE("scaled displacement has no stabilizing second moment") {
  // stable index 3/2 < 2: the running second moment keeps growing, so the
  // doubled-ensemble moment should exceed the half-ensemble one for most seeds
  const double N = 50.0, t = 1.0;
  const double scale = std::pow(N, 1.5);
  int grew = 0;
  const int sweeps = 9, M = 200;
  for (int s = 0; s < sweeps; ++s) {
    double sm_half = 0.0, sm_full = 0.0;
    for (int m = 0; m < 2 * M; ++m) {
      const auto fs = mc_flight(1.0 / std::sqrt(N), 1.0, {0.3, 1},
                                {scale * t}, 1 << 24,
                                100000ULL + 7919ULL * s + m);
      const double x = fs.disp[0] / N;
      sm_full += x * x;
      if (m < M) sm_half += x * x;
    }
    grew += sm_full / (2 * M) > sm_half / M;
  }
  CHECK(grew > sweeps / 2);
}

TEST_CASE("clock report shape and sanity") {
  ClockConfig cfg;
  cfg.B = 1.0;
  cfg.gamma = 1.0;
  cfg.delta = 0.75;
  cfg.N_list = {200.0};
  cfg.M = 50;
  cfg.seed = 8;
  const auto rep = clock_convergence(cfg);
  REQUIRE(rep.rows.size() == 1);
  const auto& row = rep.rows[0];
  CHECK(row.exceed_prob >= 0.0);
  CHECK(row.exceed_prob <= 1.0);
  CHECK(row.mean_S_end == doctest::Approx(2.0 * cfg.gamma * cfg.T)
                              .epsilon(0.2));
  CHECK(row.ci > 0.0);
  CHECK(rep.threshold == doctest::Approx(0.01));
}

TEST_CASE("hydro estimate at t = 0 reproduces the initial profile") {
  HydroConfig cfg;
  cfg.B = 1.0;
  cfg.gamma = 1.0;
  cfg.delta = 0.75;
  cfg.N = 100.0;
  cfg.t = 0.0;
  cfg.u = 0.3;
  cfg.M = 100;
  cfg.seed = 12;
  const auto rep = hydro_limit_f(cfg);
  const double J = std::exp(-1.0 / (1.0 - 0.3 * 0.3));
  CHECK(rep.theory == doctest::Approx(J).epsilon(1e-4));
  for (const auto& e : rep.estimates) {
    CHECK(e.estimate == doctest::Approx(J).epsilon(1e-10));
    CHECK(e.ci == doctest::Approx(0.0));
  }
  CHECK(rep.pass);
  CHECK(rep.pass_indep);
}

TEST_CASE("hydro estimates converge and agree across start states") {
  HydroConfig cfg;
  cfg.B = 1.0;
  cfg.gamma = 1.0;
  cfg.delta = 0.75;
  cfg.N = 10000.0;
  cfg.t = 0.1;
  cfg.u = 0.0;
  cfg.M = 400;
  cfg.seed = 3;
  const auto rep = hydro_limit_f(cfg);
  REQUIRE(rep.estimates.size() == 2);
  CHECK(rep.theory > 0.0);
  CHECK(rep.pass);
  CHECK(rep.pass_indep);
}

TEST_CASE("fast acceptance criteria pass") {
  // the full gate runs elsewhere; the cheap identity criteria double as
  // regression tests
  for (int id : {1, 2, 4, 6}) {
    const auto res = run_criterion(id, 20260824ULL);
    CHECK(res.id == id);
    CHECK_MESSAGE(res.pass, res.detail);
  }
}
