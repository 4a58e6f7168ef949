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

#ifndef ZEROAREA_GRIDFRAG_SCATTERING_HPP
#define ZEROAREA_GRIDFRAG_SCATTERING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zeroarea/gridfrag_propagator.hpp"
#include "zeroarea/pulse.hpp"

namespace zeroarea::gridfrag {

struct MollerOptions {
  double dt = 0.8;                  ///< propagation step
  double window_wavelengths = 10.0; ///< window span between its 2-sigma points, in de Broglie wavelengths
  double reference = 0.0;           ///< packet center at t = 0; 0 picks the start of the free region
  double t_free = 0.0;              ///< limit time; 0 picks a time that stays clear of the absorber at 2 t_free
  Absorber absorber{};
};

/// Start of the region where every coupling has died out and every curve is
/// within 1e-8 of its asymptote.
double free_region_start(const DiabaticModel& m);

/// Outgoing Gaussian-windowed plane wave in channel p centered at r0.
Wavepacket windowed_wave(const DiabaticModel& m, Eigen::Index p, double k, double r0, double window_wavelengths);

/// Moller image exp(i H0 T) exp(-i Hf T) phi of the windowed wave phi centered
/// at the reference radius, with Hf the uncoupled asymptotic Hamiltonian.
Wavepacket moller_state(const DiabaticModel& m, Eigen::Index p, double k, const MollerOptions& o = {});

/// Energy-normalized scattering state xi_p^-(k), obtained by projecting the
/// Moller image of a windowed wave onto E = k^2/2m + V_p(inf) and dividing by
/// the window amplitude. Outside the absorber it matches
/// exp(ikR)/sqrt(2 pi) in channel p asymptotically; inside the absorber it is
/// set to zero.
struct ScatteringState {
  Wavepacket psi;
  double energy = 0.0;
  double residual = 0.0;  ///< ||(H0 - E) xi|| / ||H0 xi|| outside the absorber
};
ScatteringState scattering_state(const DiabaticModel& m, Eigen::Index p, double k, const MollerOptions& o = {},
                                 double integration_scale = 1.0);

struct ScatteringSet {
  static constexpr std::uint32_t kVersion = 1;

  std::vector<Eigen::Index> channels;  ///< 0-based channel ids
  Eigen::VectorXd k;
  Eigen::VectorXd weights;              ///< trapezoid weights on k
  std::vector<Wavepacket> states;       ///< index c * k.size() + j
  Eigen::VectorXd residuals;
  std::uint64_t fingerprint = 0;

  const Wavepacket& state(size_t c, Eigen::Index j) const {
    return states[c * static_cast<size_t>(k.size()) + static_cast<size_t>(j)];
  }
  /// Throws NumericalError when a residual is at or above tol.
  void check_converged(double tol = 1e-3) const;
};

/// Fingerprint of the grid, mass and diabatic matrices (FNV-1a over the bytes).
std::uint64_t model_fingerprint(const DiabaticModel& m);

/// Uniform k grid of nk points on [k_min, k_max] for every channel in `channels`,
/// states built concurrently on `workers` threads. The spacing must not exceed
/// 2 pi / L with L the distance from the grid start to the absorber; coarser
/// grids alias and the objective overcounts spread packets.
ScatteringSet build_scattering_set(const DiabaticModel& m, const std::vector<Eigen::Index>& channels, double k_min,
                                   double k_max, Eigen::Index nk, const MollerOptions& o = {}, int workers = 1);

/// Momentum band of channel p reached from energy e0 by the frequencies where
/// the pulse spectrum exceeds `threshold` times its peak.
std::pair<double, double> k_band(const DiabaticModel& m, Eigen::Index p, double e0, const Pulse& pulse,
                                 double threshold = 0.05);

/// sum_p sum_j w_j |<xi_p(k_j)|psi>|^2.
double scattering_objective(const ScatteringSet& s, const DiabaticModel& m, const Wavepacket& psi);
/// O psi = sum w_j xi <xi|psi>.
Wavepacket apply_projector(const ScatteringSet& s, const DiabaticModel& m, const Wavepacket& psi);

void save_scattering_set(const std::string& path, const ScatteringSet& s);
/// Reads a container; when `expected_fingerprint` is nonzero it must match.
ScatteringSet load_scattering_set(const std::string& path, std::uint64_t expected_fingerprint = 0);

/// Target for the control engines: <O> with O the scattering projector. O
/// commutes with H0, so the interaction-frame operator is O itself.
class ProjectorTarget {
 public:
  ProjectorTarget(const ScatteringSet& s, const DiabaticModel& m) : set_(&s), model_(&m) {}
  double value(const Wavepacket& x) const { return scattering_objective(*set_, *model_, x); }
  Wavepacket terminal_adjoint(const Wavepacket& x) const { return apply_projector(*set_, *model_, x); }
  Wavepacket apply(const Wavepacket& x, double) const { return apply_projector(*set_, *model_, x); }
  double expectation(const Wavepacket& x, double) const { return value(x); }

 private:
  const ScatteringSet* set_;
  const DiabaticModel* model_;
};

/// Ground state nudged along H1 psi, so that closed-loop control has a
/// nonzero drive at t = 0: normalize(g + eps * H1 g / ||H1 g||).
Wavepacket lct_seed(const DiabaticModel& m, const Wavepacket& g, double eps);

}  // namespace zeroarea::gridfrag

#endif  // ZEROAREA_GRIDFRAG_SCATTERING_HPP
