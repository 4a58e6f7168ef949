// Copyright 2026 The zeroarea Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZEROAREA_RUN_HPP
#define ZEROAREA_RUN_HPP

#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zeroarea/config.hpp"
#include "zeroarea/gridfrag_scattering.hpp"
#include "zeroarea/rotor.hpp"

namespace zeroarea {

struct RunOptions {
  std::string out_dir = "out";
  int workers = 1;
};

/// Runs fn(0) .. fn(n-1) on up to `workers` threads. Results must be stored
/// by index; the first exception (lowest index) is rethrown after all finish.
void parallel_for(Eigen::Index n, int workers, const std::function<void(Eigen::Index)>& fn);

RotorModel rotor_model(const RunConfig& c);
/// Pulse described by the [pulse] section, in atomic units.
Pulse build_pulse(const RunConfig& c);

gridfrag::DiabaticModel gridfrag_model(const RunConfig& c);
gridfrag::Absorber gridfrag_absorber(const RunConfig& c);
gridfrag::MollerOptions moller_options(const RunConfig& c);
/// Loads gridfrag.set_file when it exists, otherwise builds the set (and
/// saves it when a path is configured).
gridfrag::ScatteringSet scattering_set(const RunConfig& c, const gridfrag::DiabaticModel& m, int workers);
/// Initial state for grid runs: lct_seed(ground, seed_eps); the ground state when seed_eps = 0.
gridfrag::Wavepacket gridfrag_initial_state(const RunConfig& c, const gridfrag::DiabaticModel& m);

struct ScanResult {
  Eigen::VectorXd f_THz;
  Eigen::VectorXd delta_Tper;
  Eigen::MatrixXd value;  ///< rows: f, cols: delta; post-pulse max |<cos theta>|
  Eigen::Index best_f = 0;
  Eigen::Index best_delta = 0;
  double best = 0.0;
};

/// Family pulse at each (f, delta), then free rotation over the horizon.
ScanResult scan_landscape(const RotorModel& m, const ScanSection& s, double intensity_TWcm2, double horizon_Tper,
                          int workers);

/// Family pulse used by a scan point: ceil(delta / dt) + 1 samples.
Pulse scan_pulse(const RotorModel& m, double f_THz, double delta_Tper, double intensity_TWcm2, double dt);

/// Ordered key/value record written as "key value" lines.
class Summary {
 public:
  void add(const std::string& key, double value);
  void add(const std::string& key, const std::string& value);
  std::string text() const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  const std::string& get(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Dispatches a subcommand: scan, propagate, lct, oct, filter, spectrum,
/// spectrogram, validate-model, moller-build. Writes its artifacts under
/// opts.out_dir and returns the process exit status.
int run_command(const std::string& command, const RunConfig& c, const RunOptions& opts);

const std::vector<std::string>& command_names();

}  // namespace zeroarea

#endif  // ZEROAREA_RUN_HPP
