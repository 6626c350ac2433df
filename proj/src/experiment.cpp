#include "ffheat/experiment.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "ffheat/errors.hpp"
#include "ffheat/integrator.hpp"
#include "ffheat/observables.hpp"
#include "ffheat/version.hpp"

namespace ffheat {

namespace fs = std::filesystem;

namespace {

struct ModeRun {
  RunMode mode;                  // standard or fast_forward, never both
  std::string slug;              // file-name fragment
  ScheduleConfig sched;          // alpha_bar = 1 view for the standard mode
  bool ff_dressing;              // apply the theta exponent factor
};

std::vector<double> output_xi(int x_resolution) {
  std::vector<double> xi(static_cast<std::size_t>(x_resolution));
  for (int j = 0; j < x_resolution; ++j) {
    xi[j] = static_cast<double>(j) / (x_resolution - 1);
  }
  return xi;
}

// One time slice of the series solution at the given physical positions.
std::vector<double> series_row(const ModalDecomposition& md,
                               const ModeRun& mr,
                               const ProtocolConfig& protocol, double t,
                               std::span<const double> xs) {
  std::vector<double> row(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) {
    row[j] = mr.ff_dressing
                 ? eval_ff_solution(md, mr.sched, xs[j], t, protocol)
                 : eval_standard_adiabatic(md, mr.sched, xs[j], t,
                                           protocol.decay_model);
  }
  return row;
}

// Values of a grid snapshot at the output nodes: exact subsampling when the
// output grid divides the solver grid, cubic Lagrange interpolation in xi
// otherwise.
std::vector<double> resample_to_output(const GridField& f,
                                       std::span<const double> xi_out) {
  const int M = f.num_cells();
  std::vector<double> out(xi_out.size());
  const int stride_den = static_cast<int>(xi_out.size()) - 1;
  if (stride_den > 0 && M % stride_den == 0) {
    const int stride = M / stride_den;
    for (std::size_t j = 0; j < xi_out.size(); ++j) {
      out[j] = f.values[j * stride];
    }
    return out;
  }
  for (std::size_t j = 0; j < xi_out.size(); ++j) {
    const double s = xi_out[j] * M;
    int i = static_cast<int>(std::floor(s));
    i = std::max(1, std::min(M - 2, i));
    const double d = s - i;
    const double wm1 = -d * (d - 1.0) * (d - 2.0) / 6.0;
    const double w0 = (d + 1.0) * (d - 1.0) * (d - 2.0) / 2.0;
    const double w1 = -(d + 1.0) * d * (d - 2.0) / 2.0;
    const double w2 = (d + 1.0) * d * (d - 1.0) / 6.0;
    out[j] = wm1 * f.values[i - 1] + w0 * f.values[i] + w1 * f.values[i + 1] +
             w2 * f.values[i + 2];
  }
  return out;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const char* header) : out_(path, std::ios::binary) {
    if (!out_) {
      throw ConfigError("cannot open output file '" + path.string() + "'");
    }
    out_ << header << "\n";
  }
  void row(double t, double x, double v) {
    out_ << format_double(t) << ',' << format_double(x) << ','
         << format_double(v) << "\n";
  }
  void close(const fs::path& path) {
    out_.flush();
    if (!out_) {
      throw ConfigError("write failed for '" + path.string() + "'");
    }
  }

 private:
  std::ofstream out_;
};

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

ScheduleConfig standard_view(const ScheduleConfig& sched) {
  ScheduleConfig view = sched;
  view.alpha_bar = 1.0;
  return view;
}

namespace {

void write_manifest(const fs::path& path, const RunConfig& cfg,
                    const ExperimentResult& result, double seconds) {
  std::ofstream out(path, std::ios::binary);
  auto mark = [&cfg](const std::string& key) -> std::string {
    if (cfg.assumed_keys.count(key)) return "  assumed=preset";
    if (cfg.defaulted_keys.count(key)) return "  (default)";
    return "";
  };
  out << "# ffheat run manifest\n";
  out << "tool_version = " << kToolVersion << "\n";
  out << "status = " << (result.status == 0 ? "ok" : "error") << "\n";
  if (result.status != 0) {
    out << "error_context = " << result.error << "\n";
  }
  out << "\n[config]\n";
  out << "kappa = " << format_double(cfg.kappa) << mark("kappa") << "\n";
  out << "schedule.L0 = " << format_double(cfg.schedule.L0)
      << mark("schedule.L0") << "\n";
  out << "schedule.epsilon = " << format_double(cfg.schedule.epsilon)
      << mark("schedule.epsilon") << "\n";
  out << "schedule.alpha_bar = " << format_double(cfg.schedule.alpha_bar)
      << mark("schedule.alpha_bar") << "\n";
  out << "schedule.T_standard = " << format_double(cfg.schedule.T_standard)
      << mark("schedule.T_standard") << "\n";
  out << "schedule.shape = " << to_string(cfg.schedule.shape)
      << mark("schedule.shape") << "\n";
  out << "schedule.T_ff = " << format_double(cfg.schedule.t_ff())
      << "  (derived)\n";
  out << "profile.x0 = " << format_double(cfg.profile.x0) << mark("profile.x0")
      << "\n";
  out << "profile.sigma = " << format_double(cfg.profile.sigma)
      << mark("profile.sigma") << "\n";
  out << "numerics.n_max = " << cfg.numerics.n_max << mark("numerics.n_max")
      << "\n";
  out << "numerics.quad_points = " << cfg.numerics.quad_points
      << mark("numerics.quad_points") << "\n";
  out << "numerics.M = " << cfg.numerics.grid_cells << mark("numerics.M")
      << "\n";
  out << "numerics.dt = " << format_double(cfg.resolved_dt())
      << (cfg.numerics.dt == 0.0 ? "  (default T_ff/4096)" : "") << "\n";
  out << "numerics.tail_tol = " << format_double(cfg.numerics.tail_tol)
      << mark("numerics.tail_tol") << "\n";
  out << "numerics.decay_model = " << to_string(cfg.numerics.decay_model)
      << mark("numerics.decay_model") << "\n";
  out << "numerics.theta_exponent = " << to_string(cfg.numerics.theta_exponent)
      << mark("numerics.theta_exponent") << "\n";
  out << "numerics.basis_normalization = "
      << to_string(cfg.numerics.basis_normalization)
      << mark("numerics.basis_normalization") << "\n";
  out << "output.x_resolution = " << cfg.output.x_resolution
      << mark("output.x_resolution") << "\n";
  out << "output.dir = " << result.output_dir.string() << "\n";
  out << "mode = " << to_string(cfg.mode) << mark("mode") << "\n";
  out << "solver = " << to_string(cfg.solver) << mark("solver") << "\n";
  const auto times = cfg.resolved_sample_times();
  out << "output.sample_times =";
  for (std::size_t i = 0; i < times.size(); ++i) {
    out << (i == 0 ? " " : ",") << format_double(times[i]);
  }
  out << (cfg.output.sample_times.empty() ? "  (uniform default)" : "")
      << "\n";
  out << "\n[diagnostics]\n";
  for (const auto& [name, value] : result.diagnostics) {
    out << name << " = " << format_double(value) << "\n";
  }
  out << "\n[timing]\n";
  out << "wall_clock_seconds = " << format_double(seconds) << "\n";
  out << "\n[files]\n";
  for (const auto& f : result.csv_files) {
    out << f.filename().string() << "\n";
  }
}

}  // namespace

ExperimentResult run_experiment(const RunConfig& cfg, std::ostream* log) {
  const auto t_start = std::chrono::steady_clock::now();
  ExperimentResult result;

  // Resolve the output directory: config key, then environment, then cwd.
  std::string dir = cfg.output.directory;
  if (dir.empty()) {
    if (const char* env = std::getenv("FFHEAT_OUTPUT_DIR")) dir = env;
  }
  if (dir.empty()) dir = ".";
  result.output_dir = fs::path(dir);

  auto finish = [&](int status, const std::string& error) {
    result.status = status;
    result.error = error;
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      t_start)
            .count();
    std::error_code ec;
    fs::create_directories(result.output_dir, ec);
    try {
      write_manifest(result.output_dir / "manifest.txt", cfg, result, seconds);
    } catch (...) {
      // manifest failure must not mask the original status
      if (result.status == 0) result.status = 1;
    }
    if (log != nullptr && !error.empty()) *log << "error: " << error << "\n";
    return result;
  };

  try {
    cfg.validate();
    std::error_code ec;
    fs::create_directories(result.output_dir, ec);
    if (ec) {
      throw ConfigError("cannot create output directory '" + dir +
                        "': " + ec.message());
    }

    const GaussianProfile profile(cfg.profile.x0, cfg.profile.sigma,
                                  cfg.schedule.L0);
    const ModalDecomposition md =
        project_profile(profile, cfg.schedule.L0, cfg.numerics.n_max,
                        cfg.numerics.quad_points, cfg.kappa,
                        cfg.numerics.tail_tol);
    result.diagnostics["truncation_tail_ratio"] = md.tail_ratio();

    const ProtocolConfig protocol = cfg.protocol();
    const std::vector<double> times = cfg.resolved_sample_times();
    const std::vector<double> xi_out = output_xi(cfg.output.x_resolution);
    const double dt = cfg.resolved_dt();

    std::vector<ModeRun> modes;
    if (cfg.mode != RunMode::fast_forward) {
      modes.push_back({RunMode::standard, "standard",
                       standard_view(cfg.schedule), false});
    }
    if (cfg.mode != RunMode::standard) {
      modes.push_back(
          {RunMode::fast_forward, "fast_forward", cfg.schedule, true});
    }
    const bool want_series = cfg.solver != SolverKind::grid;
    const bool want_grid = cfg.solver != SolverKind::series;

    for (const ModeRun& mr : modes) {
      // final-time slices retained for the cross-solver diagnostics
      std::vector<double> final_series, final_grid;
      double final_L = 0.0;

      if (want_series) {
        CsvWriter profile_csv(
            result.output_dir / ("profile_" + mr.slug + "_series.csv"),
            "t,x,u");
        CsvWriter flux_csv(
            result.output_dir / ("flux_" + mr.slug + "_series.csv"), "t,x,J");
        for (double t : times) {
          const double L = wall_position(mr.sched, t, Clock::fast_forward);
          std::vector<double> xs(xi_out.size());
          for (std::size_t j = 0; j < xs.size(); ++j) xs[j] = xi_out[j] * L;
          const std::vector<double> row = series_row(md, mr, protocol, t, xs);
          const FluxField flux =
              mr.ff_dressing
                  ? heat_flux_series_ff(md, mr.sched, xs, t, protocol)
                  : heat_flux_series_standard(md, mr.sched, xs, t,
                                              protocol.decay_model);
          for (std::size_t j = 0; j < xs.size(); ++j) {
            profile_csv.row(t, xs[j], row[j]);
            flux_csv.row(t, xs[j], flux.flux_values[j]);
          }
          if (t == times.back()) {
            final_series = row;
            final_L = L;
          }
        }
        profile_csv.close(result.output_dir /
                          ("profile_" + mr.slug + "_series.csv"));
        flux_csv.close(result.output_dir /
                       ("flux_" + mr.slug + "_series.csv"));
        result.csv_files.push_back(result.output_dir /
                                   ("profile_" + mr.slug + "_series.csv"));
        result.csv_files.push_back(result.output_dir /
                                   ("flux_" + mr.slug + "_series.csv"));
        if (log) *log << "wrote series datasets for mode " << mr.slug << "\n";
      }

      if (want_grid) {
        const MovingBoxProblem problem =
            mr.ff_dressing ? make_ff_problem(cfg.kappa, mr.sched)
                           : make_standard_problem(cfg.kappa, mr.sched);
        auto run_once = [&](int cells, double step_dt) {
          const double L_start = problem.wall(times.front());
          GridField initial = sample_initial_field(
              [&](double x) {
                return series_row(md, mr, protocol, times.front(),
                                  std::span<const double>(&x, 1))[0];
              },
              L_start, cells);
          initial.t = times.front();
          return run(initial, problem, times, step_dt);
        };
        const std::vector<GridField> traj =
            run_once(cfg.numerics.grid_cells, dt);

        CsvWriter profile_csv(
            result.output_dir / ("profile_" + mr.slug + "_grid.csv"), "t,x,u");
        CsvWriter flux_csv(result.output_dir / ("flux_" + mr.slug + "_grid.csv"),
                           "t,x,J");
        for (const GridField& snap : traj) {
          const std::vector<double> row = resample_to_output(snap, xi_out);
          const FluxField flux_full = heat_flux_grid(snap, cfg.kappa);
          GridField flux_as_field;  // reuse the resampler for the flux values
          flux_as_field.values = flux_full.flux_values;
          flux_as_field.L = snap.L;
          flux_as_field.t = snap.t;
          const std::vector<double> flux_row =
              resample_to_output(flux_as_field, xi_out);
          for (std::size_t j = 0; j < xi_out.size(); ++j) {
            const double x = xi_out[j] * snap.L;
            profile_csv.row(snap.t, x, row[j]);
            flux_csv.row(snap.t, x, flux_row[j]);
          }
          if (snap.t == times.back()) {
            final_grid = row;
            final_L = snap.L;
          }
        }
        profile_csv.close(result.output_dir /
                          ("profile_" + mr.slug + "_grid.csv"));
        flux_csv.close(result.output_dir / ("flux_" + mr.slug + "_grid.csv"));
        result.csv_files.push_back(result.output_dir /
                                   ("profile_" + mr.slug + "_grid.csv"));
        result.csv_files.push_back(result.output_dir /
                                   ("flux_" + mr.slug + "_grid.csv"));
        if (log) *log << "wrote grid datasets for mode " << mr.slug << "\n";

        // Discretization estimate: the same run at half resolution in both
        // space and time, compared at the final sample time. Skipped when
        // the halved grid cannot carry the advection (Peclet guard).
        if (cfg.numerics.grid_cells % 2 == 0 &&
            cfg.numerics.grid_cells / 2 >= 16) {
          try {
            const std::vector<GridField> coarse =
                run_once(cfg.numerics.grid_cells / 2, 2.0 * dt);
            const std::vector<double> coarse_row =
                resample_to_output(coarse.back(), xi_out);
            const std::vector<double> fine_row =
                resample_to_output(traj.back(), xi_out);
            const double dx_out =
                traj.back().L / (cfg.output.x_resolution - 1);
            const FieldErrorReport rep =
                compare_fields(coarse_row, fine_row, dx_out);
            result.diagnostics["discretization_estimate." + mr.slug] =
                rep.rel_l2;
          } catch (const ConfigError&) {
            if (log) {
              *log << "half-resolution companion run rejected; no "
                      "discretization estimate for mode "
                   << mr.slug << "\n";
            }
          }
        }
      }

      if (!final_series.empty() && !final_grid.empty()) {
        const double dx_out = final_L / (cfg.output.x_resolution - 1);
        const FieldErrorReport rep =
            compare_fields(final_series, final_grid, dx_out);
        result.diagnostics["series_grid_rel_l2." + mr.slug] = rep.rel_l2;
      }

      // Decay-model discrepancy of the final series slice.
      {
        const double t_last = times.back();
        const double L = wall_position(mr.sched, t_last, Clock::fast_forward);
        std::vector<double> xs(xi_out.size());
        for (std::size_t j = 0; j < xs.size(); ++j) xs[j] = xi_out[j] * L;
        ProtocolConfig lit = protocol, integ = protocol;
        lit.decay_model = DecayModel::literal;
        integ.decay_model = DecayModel::integrated;
        const std::vector<double> a = series_row(md, mr, lit, t_last, xs);
        const std::vector<double> b = series_row(md, mr, integ, t_last, xs);
        const FieldErrorReport rep =
            compare_fields(a, b, L / (cfg.output.x_resolution - 1));
        result.diagnostics["decay_model_discrepancy_rel_l2." + mr.slug] =
            rep.rel_l2;
      }
    }

    // Combined consistency budget for the fast-forwarded comparison.
    {
      const auto disc =
          result.diagnostics.find("discretization_estimate.fast_forward");
      const auto decay =
          result.diagnostics.find("decay_model_discrepancy_rel_l2.fast_forward");
      if (disc != result.diagnostics.end() &&
          decay != result.diagnostics.end()) {
        result.diagnostics["combined_budget.fast_forward"] =
            disc->second + decay->second;
      }
    }

    return finish(0, "");
  } catch (const ConfigError& e) {
    return finish(1, e.what());
  } catch (const NumericalError& e) {
    return finish(2, e.what());
  } catch (const SingularityError& e) {
    return finish(2, e.what());
  } catch (const UndefinedWidthError& e) {
    return finish(2, e.what());
  } catch (const std::exception& e) {
    return finish(2, e.what());
  }
}

}  // namespace ffheat
