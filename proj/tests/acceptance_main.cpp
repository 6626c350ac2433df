// Acceptance suite: one check per shipped criterion, one pass/fail line
// each, exit code = number of failures.
//
// Usage: ffheat_acceptance [N]   (run criterion N only; default: all)

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ffheat/experiment.hpp"
#include "ffheat/fastforward.hpp"
#include "ffheat/integrator.hpp"
#include "ffheat/observables.hpp"
#include "ffheat/schedule.hpp"
#include "ffheat/spectral.hpp"
#include "oracles.hpp"

using namespace ffheat;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct CriterionResult {
  bool pass = true;
  std::vector<std::string> detail;

  void require(bool ok, const std::string& msg) {
    if (!ok) {
      pass = false;
      detail.push_back("FAILED: " + msg);
    }
  }
  void note(const std::string& msg) { detail.push_back(msg); }
};

std::string fmt(double v) { return format_double(v); }

ScheduleConfig paper_sched() { return ScheduleConfig{}; }

ModalDecomposition paper_md() {
  return project_profile(GaussianProfile(5.0, 1.0, 10.0), 10.0, 64, 1024, 0.5);
}

// ---------------------------------------------------------------------------
// 1. Schedule identities
// ---------------------------------------------------------------------------
CriterionResult criterion1() {
  CriterionResult r;
  std::mt19937 rng(1001);
  std::uniform_real_distribution<double> abar(1.0, 200.0), T(0.5, 200.0),
      frac(0.0, 1.0);
  double worst_endpoint = 0.0, worst_quadrature = 0.0;
  for (int k = 0; k < 100; ++k) {
    ScheduleConfig cfg;
    cfg.alpha_bar = abar(rng);
    cfg.T_standard = T(rng);
    const double endpoint =
        std::abs(advanced_time(cfg, cfg.t_ff()) - cfg.T_standard) /
        cfg.T_standard;
    worst_endpoint = std::max(worst_endpoint, endpoint);
    const double t = frac(rng) * cfg.t_ff();
    const double closed = advanced_time(cfg, t);
    const double quad = oracles::adaptive_simpson(
        [&](double s) { return alpha(cfg, s); }, 0.0, t, 1e-13);
    const double rel =
        std::abs(closed - quad) / std::max({1.0, std::abs(closed)});
    worst_quadrature = std::max(worst_quadrature, rel);
  }
  r.note("max relative |Lambda(T_ff) - T| = " + fmt(worst_endpoint));
  r.note("max relative closed-form vs quadrature = " + fmt(worst_quadrature));
  r.require(worst_endpoint <= 1e-10, "Lambda(T_ff) = T beyond 1e-10 relative");
  r.require(worst_quadrature <= 1e-10,
            "closed-form Lambda vs quadrature beyond 1e-10");
  return r;
}

// ---------------------------------------------------------------------------
// 2. Theta oracle
// ---------------------------------------------------------------------------
CriterionResult criterion2() {
  CriterionResult r;
  std::mt19937 rng(1002);
  std::uniform_real_distribution<double> Ld(5.0, 15.0), frac(0.02, 0.98);
  double worst = 0.0;
  // 1000 random (x, L) pairs per mode, kept clear of that mode's nodes
  // where the defining expression's 1/u^2 makes the oracle ill-conditioned
  for (int n = 1; n <= 32; ++n) {
    for (int k = 0; k < 1000; ++k) {
      const double L = Ld(rng);
      double x = frac(rng) * L;
      while (!oracles::node_clearance(x, L, n)) x = frac(rng) * L;
      const double impl =
          theta_gradient(x, L, n, BasisNormalization::normalized);
      const double oracle = oracles::theta_gradient_box_oracle(x, L, n);
      worst = std::max(worst, std::abs(impl - oracle));
    }
  }
  r.note("max |theta_gradient - quadrature/dL oracle| = " + fmt(worst));
  r.require(worst <= 1e-9, "theta gradient differs from its oracle by > 1e-9");
  return r;
}

// ---------------------------------------------------------------------------
// 3. V_ff cancellation
// ---------------------------------------------------------------------------
CriterionResult criterion3() {
  CriterionResult r;
  const ScheduleConfig cfg = paper_sched();
  std::mt19937 rng(1003);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double t = frac(rng) * cfg.t_ff();
    const double L = wall_position(cfg, t, Clock::fast_forward);
    const double x = frac(rng) * L;
    const double dadt = (cfg.alpha_bar - 1.0) * (2.0 * kPi / cfg.t_ff()) *
                        std::sin(2.0 * kPi * t / cfg.t_ff());
    const double single = -dadt * cfg.epsilon * x * x / (2.0 * L);
    const double full = ff_potential(x, t, cfg);
    if (std::abs(single) > 1e-30) {
      worst = std::max(worst, std::abs(full - single) / std::abs(single));
    }
  }
  r.note("max relative |three-term - single-term| = " + fmt(worst));
  r.require(worst <= 1e-12, "three-term V_ff deviates beyond 1e-12 relative");
  return r;
}

// ---------------------------------------------------------------------------
// 4. Degeneracy chain
// ---------------------------------------------------------------------------
CriterionResult criterion4() {
  CriterionResult r;
  const ModalDecomposition md = paper_md();

  // epsilon = 0: the fast-forwarded field must equal the fixed-box field
  {
    ScheduleConfig still = paper_sched();
    still.epsilon = 0.0;
    double worst = 0.0;
    for (int j = 0; j < 64; ++j) {
      const double t = still.t_ff() * j / 63.0;
      for (int i = 0; i <= 511; ++i) {
        const double x = 10.0 * i / 511.0;
        worst = std::max(worst, std::abs(eval_ff_solution(md, still, x, t) -
                                         eval_standard_fixed(md, x, t)));
      }
    }
    r.note("eps=0 vs fixed box: max nodal difference = " + fmt(worst));
    r.require(worst <= 1e-14, "eps=0 does not collapse to the fixed box");
  }

  // alpha_bar = 1: the fast-forwarded field against the adiabatic field.
  // The dressed series keeps its exp(eps*theta) factor even with no
  // magnification, so the difference is the dressing itself; measured and
  // reported, gated as specified.
  {
    ScheduleConfig degenerate = paper_sched();
    degenerate.alpha_bar = 1.0;
    double worst = 0.0;
    for (int j = 0; j < 64; ++j) {
      const double t = paper_sched().t_ff() * j / 63.0;
      const double L = wall_position(degenerate, t, Clock::fast_forward);
      for (int i = 0; i <= 511; ++i) {
        const double x = L * i / 511.0;
        worst = std::max(worst,
                         std::abs(eval_ff_solution(md, degenerate, x, t) -
                                  eval_standard_adiabatic(md, degenerate, x, t)));
      }
    }
    r.note("alpha_bar=1 vs adiabatic: max nodal difference = " + fmt(worst));
    r.note("(the exp(eps*theta) dressing survives the alpha_bar=1 limit;");
    r.note(" it only vanishes with eps, see next line)");
    r.require(worst <= 1e-14,
              "alpha_bar=1 does not collapse to the adiabatic series (the "
              "dressing factor exp(eps*theta) != 1 at finite eps)");

    ScheduleConfig flat = degenerate;
    flat.epsilon = 0.0;
    double worst_flat = 0.0;
    for (int j = 0; j < 64; ++j) {
      const double t = paper_sched().t_ff() * j / 63.0;
      for (int i = 0; i <= 511; ++i) {
        const double x = 10.0 * i / 511.0;
        worst_flat = std::max(
            worst_flat, std::abs(eval_ff_solution(md, flat, x, t) -
                                 eval_standard_adiabatic(md, flat, x, t)));
      }
    }
    r.note("informational: alpha_bar=1 AND eps=0 max difference = " +
           fmt(worst_flat));
  }
  return r;
}

// ---------------------------------------------------------------------------
// 5. Solver cross-validation (convergence orders)
// ---------------------------------------------------------------------------
CriterionResult criterion5() {
  CriterionResult r;
  const double L0 = 10.0, kappa = 0.5, tau = 4.0;
  ScheduleConfig still;
  still.epsilon = 0.0;
  still.alpha_bar = 1.0;
  const MovingBoxProblem prob = make_standard_problem(kappa, still);
  const double exact_decay =
      std::exp(-kPi * kPi * kappa * kappa * tau / (L0 * L0));

  auto run_error = [&](int M, long steps) {
    GridField f = sample_initial_field(
        [L0](double x) { return std::sin(kPi * x / L0); }, L0, M);
    const double dt = tau / steps;
    for (long s = 0; s < steps; ++s) f = step(f, dt, prob);
    double e = 0.0;
    for (int i = 0; i <= M; ++i) {
      e = std::max(e, std::abs(f.values[i] -
                               exact_decay *
                                   std::sin(kPi * i / static_cast<double>(M))));
    }
    return e;
  };

  // spatial refinement, time error held negligible
  std::array<double, 3> es{};
  {
    int M = 16;
    for (int level = 0; level < 3; ++level, M *= 2) {
      es[level] = run_error(M, 4096);
    }
    const double o1 = std::log2(es[0] / es[1]);
    const double o2 = std::log2(es[1] / es[2]);
    r.note("space orders: " + fmt(o1) + ", " + fmt(o2));
    r.require(o1 >= 1.9 && o2 >= 1.9, "spatial convergence order < 1.9");
  }
  // temporal refinement; M = 1024 pushes the spatial error floor two
  // orders below the coarsest time error so the ratios stay clean
  {
    long steps = 2;
    for (int level = 0; level < 3; ++level, steps *= 2) {
      es[level] = run_error(1024, steps);
    }
    const double o1 = std::log2(es[0] / es[1]);
    const double o2 = std::log2(es[1] / es[2]);
    r.note("time orders: " + fmt(o1) + ", " + fmt(o2));
    r.require(o1 >= 1.9 && o2 >= 1.9, "temporal convergence order < 1.9");
  }
  return r;
}

// ---------------------------------------------------------------------------
// 6. Fig. 1 qualitative reproduction (profile widths)
// ---------------------------------------------------------------------------
CriterionResult criterion6() {
  CriterionResult r;
  const ModalDecomposition md = paper_md();
  const ScheduleConfig ff_sched = paper_sched();
  const ScheduleConfig std_sched = standard_view(ff_sched);
  bool all_wider = true;
  double min_margin = 1e300;
  for (int j = 0; j < 9; ++j) {
    const double t = ff_sched.t_ff() * j / 8.0;
    const double L_ff = wall_position(ff_sched, t, Clock::fast_forward);
    const double L_std = wall_position(std_sched, t, Clock::fast_forward);
    const double w_ff = profile_width(
        [&](double x) { return eval_ff_solution(md, ff_sched, x, t); }, L_ff);
    const double w_std = profile_width(
        [&](double x) { return eval_standard_adiabatic(md, std_sched, x, t); },
        L_std);
    min_margin = std::min(min_margin, w_ff - w_std);
    if (w_ff < w_std) all_wider = false;
  }
  r.note("min width(ff) - width(standard) over matched times = " +
         fmt(min_margin));
  r.require(all_wider, "fast-forwarded profile narrower at a matched time");

  const double L_ff_end =
      wall_position(ff_sched, ff_sched.t_ff(), Clock::fast_forward);
  const double L_std_end =
      wall_position(ff_sched, ff_sched.t_ff(), Clock::standard);
  r.note("domain lengths at T_ff: ff = " + fmt(L_ff_end) +
         ", standard = " + fmt(L_std_end));
  r.require(L_ff_end > L_std_end,
            "fast-forwarded box is not wider at T_ff");
  return r;
}

// shared by criteria 7: total sign changes along both lattice directions
int sign_change_count(const std::vector<std::vector<double>>& rows) {
  const double thr = [&] {
    double m = 0.0;
    for (const auto& row : rows) {
      for (double v : row) m = std::max(m, std::abs(v));
    }
    return 1e-12 * m;
  }();
  auto count_series = [thr](auto&& get, std::size_t n) {
    int flips = 0;
    int last_sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = get(i);
      const int s = v > thr ? 1 : (v < -thr ? -1 : 0);
      if (s != 0) {
        if (last_sign != 0 && s != last_sign) ++flips;
        last_sign = s;
      }
    }
    return flips;
  };
  int total = 0;
  for (const auto& row : rows) {
    total += count_series([&](std::size_t i) { return row[i]; }, row.size());
  }
  for (std::size_t j = 0; j < rows.front().size(); ++j) {
    total +=
        count_series([&](std::size_t i) { return rows[i][j]; }, rows.size());
  }
  return total;
}

// ---------------------------------------------------------------------------
// 7. Fig. 2 qualitative reproduction (flux oscillations)
// ---------------------------------------------------------------------------
CriterionResult criterion7() {
  CriterionResult r;
  const ModalDecomposition md = paper_md();
  const ScheduleConfig ff_sched = paper_sched();
  const ScheduleConfig std_sched = standard_view(ff_sched);
  const int n_times = 129, n_x = 257;
  std::vector<double> times(n_times);
  for (int k = 0; k < n_times; ++k) {
    times[k] = ff_sched.t_ff() * k / (n_times - 1);
  }

  // standard system: term-differentiated series flux (the long slow system
  // barely evolves inside the matched wall-clock window)
  std::vector<std::vector<double>> std_flux;
  for (double t : times) {
    const double L = wall_position(std_sched, t, Clock::fast_forward);
    std::vector<double> xs(n_x);
    for (int i = 0; i < n_x; ++i) xs[i] = L * i / (n_x - 1);
    std_flux.push_back(
        heat_flux_series_standard(md, std_sched, xs, t).flux_values);
  }

  // fast-forwarded system: direct integration of the driven equation,
  // the same route the reference plots use
  const MovingBoxProblem prob = make_ff_problem(0.5, ff_sched);
  GridField init = sample_initial_field(
      [&](double x) { return eval_ff_solution(md, ff_sched, x, 0.0); }, 10.0,
      512);
  const auto traj = run(init, prob, times, ff_sched.t_ff() / 4096.0);
  std::vector<std::vector<double>> ff_flux;
  for (const GridField& snap : traj) {
    const FluxField full = heat_flux_grid(snap, 0.5);
    std::vector<double> sub(n_x);
    for (int i = 0; i < n_x; ++i) sub[i] = full.flux_values[i * 2];
    ff_flux.push_back(sub);
  }

  const int c_std = sign_change_count(std_flux);
  const int c_ff = sign_change_count(ff_flux);
  r.note("flux sign changes: standard(series) = " + std::to_string(c_std) +
         ", fast-forward(grid) = " + std::to_string(c_ff));
  r.require(c_ff > c_std,
            "fast-forwarded flux does not oscillate more than the standard");
  return r;
}

// ---------------------------------------------------------------------------
// 8. Series-vs-grid consistency gate on the full fast-forward preset
// ---------------------------------------------------------------------------
CriterionResult criterion8() {
  CriterionResult r;
  RunConfig cfg = preset_config("fig2");
  const fs::path dir = fs::temp_directory_path() / "ffheat_acceptance_c8";
  fs::remove_all(dir);
  cfg.output.directory = dir.string();
  const ExperimentResult result = run_experiment(cfg);
  r.require(result.status == 0, "preset run failed: " + result.error);
  if (result.status != 0) return r;

  const double gap = result.diagnostics.at("series_grid_rel_l2.fast_forward");
  const double disc =
      result.diagnostics.at("discretization_estimate.fast_forward");
  const double decay =
      result.diagnostics.at("decay_model_discrepancy_rel_l2.fast_forward");
  const double budget = result.diagnostics.at("combined_budget.fast_forward");
  r.note("relative L2(series, grid) at T_ff = " + fmt(gap));
  r.note("budget = discretization " + fmt(disc) + " + decay-model " +
         fmt(decay) + " = " + fmt(budget));
  r.note("(the dressed series does not solve the driven equation: the");
  r.note(" equation cannot stretch the profile with the box, the series");
  r.note(" does; the gap is structural, not a resolution artifact)");
  r.require(gap <= budget,
            "series/grid discrepancy exceeds the consistency budget");
  return r;
}

// ---------------------------------------------------------------------------
// 9. Determinism of the emitted datasets
// ---------------------------------------------------------------------------
CriterionResult criterion9() {
  CriterionResult r;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  for (const char* preset : {"fig1", "fig2", "fig3"}) {
    std::array<fs::path, 2> dirs;
    std::array<std::vector<fs::path>, 2> files;
    for (int rep = 0; rep < 2; ++rep) {
      RunConfig cfg = preset_config(preset);
      dirs[rep] = fs::temp_directory_path() /
                  ("ffheat_acceptance_c9_" + std::string(preset) + "_" +
                   std::to_string(rep));
      fs::remove_all(dirs[rep]);
      cfg.output.directory = dirs[rep].string();
      const ExperimentResult result = run_experiment(cfg);
      if (result.status != 0) {
        r.require(false, std::string("preset ") + preset +
                             " failed: " + result.error);
        return r;
      }
      files[rep] = result.csv_files;
    }
    if (files[0].size() != files[1].size()) {
      r.require(false, std::string("preset ") + preset +
                           ": dataset count differs between runs");
      continue;
    }
    bool identical = true;
    for (std::size_t i = 0; i < files[0].size(); ++i) {
      if (slurp(files[0][i]) != slurp(files[1][i])) {
        identical = false;
        r.require(false, std::string("preset ") + preset + ": " +
                             files[0][i].filename().string() +
                             " differs between runs");
      }
    }
    if (identical) {
      r.note(std::string(preset) + ": " + std::to_string(files[0].size()) +
             " files byte-identical");
    }
  }
  return r;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  CriterionResult (*fn)();
};

const std::array<Criterion, 9> kCriteria{{
    {1, "schedule identities", 1.0, criterion1},
    {2, "theta oracle", 5.0, criterion2},
    {3, "V_ff cancellation", 1.0, criterion3},
    {4, "degeneracy chain", 5.0, criterion4},
    {5, "solver convergence order", 30.0, criterion5},
    {6, "profile widening (fig1)", 60.0, criterion6},
    {7, "flux oscillations (fig2)", 60.0, criterion7},
    {8, "series-vs-grid consistency gate", 120.0, criterion8},
    {9, "dataset determinism", 120.0, criterion9},
}};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(kCriteria.size())) {
      std::fprintf(stderr, "usage: %s [1..%zu]\n", argv[0], kCriteria.size());
      return 64;
    }
  }
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = c.fn();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (seconds >= c.limit_seconds) {
      result.pass = false;
      result.detail.push_back("runtime limit " +
                              std::to_string(c.limit_seconds) + " s exceeded");
    }
    std::printf("[%s] criterion %d: %s (%.2f s, limit %.0f s)\n",
                result.pass ? "PASS" : "FAIL", c.number, c.name, seconds,
                c.limit_seconds);
    for (const std::string& line : result.detail) {
      std::printf("    %s\n", line.c_str());
    }
    if (!result.pass) ++failures;
  }
  return failures;
}
