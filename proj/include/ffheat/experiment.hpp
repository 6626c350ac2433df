#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ffheat/config.hpp"

namespace ffheat {

// The slow reference system is the degenerate alpha_bar = 1 schedule: the
// advanced time is the wall clock and the wall moves at epsilon.
ScheduleConfig standard_view(const ScheduleConfig& sched);

struct ExperimentResult {
  int status = 0;  // 0 ok, 1 config error, 2 numerical failure
  std::string error;
  std::filesystem::path output_dir;
  std::vector<std::filesystem::path> csv_files;
  // Named scalar diagnostics, echoed into the manifest.
  std::map<std::string, double> diagnostics;
};

// Runs the configured experiment: emits profile_<mode>_<solver>.csv and
// flux_<mode>_<solver>.csv per (mode, solver) combination plus manifest.txt
// into the output directory. Deterministic: repeated runs produce
// byte-identical CSV files. Never throws; failures are reported through the
// status code and recorded in the manifest.
ExperimentResult run_experiment(const RunConfig& cfg,
                                std::ostream* log = nullptr);

// Shortest round-trip decimal form of v; shared by all emitters.
std::string format_double(double v);

}  // namespace ffheat
