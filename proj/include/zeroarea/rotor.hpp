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

#ifndef ZEROAREA_ROTOR_HPP
#define ZEROAREA_ROTOR_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "zeroarea/pulse.hpp"
#include "zeroarea/two_term.hpp"
#include "zeroarea/units.hpp"

namespace zeroarea {

/// Rigid rotor H = B J^2 - E(t) d cos(theta) in the |j, m> basis, j <= jmax.
struct RotorModel {
  double b = units::wavenumber_to_hartree(1.9312);
  double d = 0.044;
  int jmax = 16;

  static RotorModel carbon_monoxide(int jmax = 16) { return {units::wavenumber_to_hartree(1.9312), 0.044, jmax}; }
  void validate() const;
  double period() const { return units::rotor_period(b); }
  /// Basis size of the |m| block.
  Eigen::Index block_dim(int m) const { return jmax - std::abs(m) + 1; }
};

struct RotorOperators {
  int m = 0;
  Eigen::VectorXd h0;        ///< B j(j+1), j = |m| .. jmax
  Eigen::MatrixXd costheta;  ///< symmetric tridiagonal
};

RotorOperators build_operators(const RotorModel& model, int m);
/// Two-term form with h1 = -d cos(theta).
TwoTermHamiltonian<double> rotor_hamiltonian(const RotorModel& model, int m);

/// Pure state confined to one m block; coeffs[i] multiplies |j = |m| + i, m>.
struct RotorState {
  int m = 0;
  Eigen::VectorXcd coeffs;

  static RotorState ground(const RotorModel& model);
  double norm() const { return coeffs.norm(); }
};

/// Block-diagonal density matrix. Block b holds the |m| = ms[b] sector; for
/// m > 0 it carries the combined weight of +m and -m, which evolve identically.
struct RotorDensity {
  std::vector<int> ms;
  std::vector<Eigen::MatrixXcd> blocks;

  double trace() const;
  static RotorDensity from_state(const RotorState& s);
};

/// Thermal density; states with Boltzmann weight below 1e-6 of the largest are dropped.
RotorDensity boltzmann_init(const RotorModel& model, double kelvin);

struct RotorTrajectory {
  Eigen::VectorXd times;
  Eigen::VectorXd cos_theta;
  Eigen::VectorXd norm;  ///< norm for pure states, trace for densities
};

struct StateRun {
  RotorTrajectory trajectory;
  RotorState final_state;
};
struct DensityRun {
  RotorTrajectory trajectory;
  RotorDensity final_density;
};

/// Strang-split propagation with dt_sub dividing the pulse step.
StateRun propagate_state(const RotorModel& model, const RotorState& psi0, const Pulse& pulse, double dt_sub);
DensityRun propagate_density(const RotorModel& model, const RotorDensity& rho0, const Pulse& pulse, double dt_sub);

double cos_theta(const RotorModel& model, const RotorState& s);
double cos_theta(const RotorModel& model, const RotorDensity& rho);

/// exp(i H0 tau) cos(theta) exp(-i H0 tau): its expectation at t equals
/// <cos(theta)> at t + tau under free rotation.
Eigen::MatrixXcd target_operator(const RotorModel& model, double tau, int m);

/// <cos(theta)>(t) after free rotation for time t, evaluated analytically.
double free_cos_theta(const RotorModel& model, const RotorState& s, double t);
double free_cos_theta(const RotorModel& model, const RotorDensity& rho, double t);

struct PeakResult {
  double t_peak = 0.0;
  double value = 0.0;  ///< signed <cos(theta)> at t_peak
  bool found = false;  ///< false: no qualifying maximum, boundary returned
  bool degenerate = false;  ///< <cos(theta)> identically zero
};

/// First local maximum of |<cos(theta)>| under free rotation in [0, horizon].
/// t = 0 counts when |<cos(theta)>| does not grow right after it. Maxima below
/// prominence * (global maximum over the horizon) are skipped.
PeakResult free_orientation_peak(const RotorModel& model, const RotorState& s, double horizon,
                                 double prominence = 0.9);
/// Global maximum of |<cos(theta)>| under free rotation in [0, horizon].
PeakResult free_orientation_max(const RotorModel& model, const RotorState& s, double horizon);
PeakResult free_orientation_max(const RotorModel& model, const RotorDensity& rho, double horizon);

/// Rotor objective <O> on a single m block, optionally in the interaction
/// frame of H0 for closed-loop control.
class RotorTarget {
 public:
  using State = Eigen::VectorXcd;
  RotorTarget(Eigen::MatrixXcd op, Eigen::VectorXd h0, double shift = 0.0, bool co_rotating = true);

  double value(const State& psi) const;
  State terminal_adjoint(const State& psi) const;
  State apply(const State& psi, double t) const;
  double expectation(const State& psi, double t) const;
  const Eigen::MatrixXcd& op() const { return op_; }

 private:
  Eigen::MatrixXcd op_;
  Eigen::VectorXd h0_;
  double shift_;
  bool co_rotating_;
};

/// Density objective sum_b Tr(O_b rho_b); the costate seed is O + shift.
/// apply() returns the operator itself, which is the costate whose coupling
/// with rho gives the closed-loop drive.
class RotorDensityTarget {
 public:
  using State = std::vector<Eigen::MatrixXcd>;
  RotorDensityTarget(std::vector<Eigen::MatrixXcd> ops, double shift = 0.0);

  double value(const State& rho) const;
  State terminal_adjoint(const State& rho) const;
  State apply(const State& rho, double t) const;
  double expectation(const State& rho, double) const { return value(rho); }

 private:
  std::vector<Eigen::MatrixXcd> ops_;
  double shift_;
};

/// cos(theta) (rotated by tau) on every block of a density.
RotorDensityTarget density_target(const RotorModel& model, const RotorDensity& rho, double tau, double shift = 1.0);

std::vector<TwoTermHamiltonian<double>> density_hamiltonians(const RotorModel& model, const RotorDensity& rho);

}  // namespace zeroarea

#endif  // ZEROAREA_ROTOR_HPP
