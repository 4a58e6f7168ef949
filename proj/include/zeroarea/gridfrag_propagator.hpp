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

#ifndef ZEROAREA_GRIDFRAG_PROPAGATOR_HPP
#define ZEROAREA_GRIDFRAG_PROPAGATOR_HPP

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include "zeroarea/gridfrag_model.hpp"
#include "zeroarea/pulse.hpp"
#include "zeroarea/split.hpp"

namespace zeroarea::gridfrag {

/// Channel amplitudes on the grid: rows are grid points, columns channels.
/// The norm is dR * sum |psi|^2.
using Wavepacket = Eigen::MatrixXcd;

double norm2(const DiabaticModel& m, const Wavepacket& psi);
std::complex<double> inner(const DiabaticModel& m, const Wavepacket& a, const Wavepacket& b);

/// Quartic mask exp(-strength * x^4 * h) on the outer fraction of the grid.
/// x rises from 0 at the absorber start to 1 mid-strip and falls back to 0 at
/// the periodic seam, so packets entering from either side see a smooth ramp.
struct Absorber {
  double fraction = 0.1;
  double strength = 0.1;

  Eigen::VectorXd mask(const Eigen::VectorXd& r, double h) const;
  double start(const Eigen::VectorXd& r) const;
};

/// Split-step propagator for H = T + Vd(R) - E(t) Md(R) with step h:
///   pre  = exp(-i V h/2) exp(-i T h/2)
///   kick = exp(+i E Md h)
///   post = mask exp(-i T h/2) exp(-i V h/2)
/// so H1 = -Md. Holds FFT scratch space, so one instance per thread.
class GridPropagator {
 public:
  using State = Wavepacket;

  GridPropagator(const DiabaticModel& m, double h, std::optional<Absorber> absorber = std::nullopt);

  void pre(State& x) const;
  void kick(State& x, double e) const;
  void post(State& x) const;
  void pre_adjoint(State& x) const;
  void kick_adjoint(State& x, double e) const { kick(x, -e); }
  void post_adjoint(State& x) const;
  double coupling(const State& chi, const State& psi) const;
  double step_size() const { return h_; }

  /// Field-free step exp(-i H0 h) (with the mask when present).
  void free_step(State& x) const;
  /// Adjoint of free_step.
  void free_step_adjoint(State& x) const;

  /// Norm removed by the mask per channel since the last reset.
  const Eigen::VectorXd& absorbed() const { return absorbed_; }
  void reset_absorbed() const { absorbed_.setZero(); }
  bool has_absorber() const { return mask_.size() > 0; }
  const DiabaticModel& model() const { return *model_; }

  /// Largest kinetic energy on the grid.
  double max_kinetic() const;

 private:
  void kinetic(State& x, bool adjoint) const;
  void potential(State& x, bool adjoint) const;
  void apply_mask(State& x, bool track) const;

  const DiabaticModel* model_;
  double h_;
  Eigen::Index np_, nc_;
  Eigen::VectorXcd kin_half_;
  static constexpr Eigen::Index kMaxChannels = 16;

  std::vector<std::complex<double>> v_half_;  ///< row-major N x N block per point
  std::vector<double> m_vectors_;             ///< eigenvectors of Md, row-major per point
  std::vector<double> m_values_;
  Eigen::VectorXd mask_;
  mutable Eigen::VectorXd absorbed_;
  mutable Eigen::FFT<double> fft_;
  mutable std::vector<std::complex<double>> buf_in_, buf_out_;
};

/// Lowest eigenpair of T + Va_ground on the Fourier grid, rotated into the
/// diabatic representation and normalized. Throws ValidationError when the
/// curve has no bound state below its asymptote.
struct GroundState {
  Wavepacket psi;
  double energy = 0.0;
};
GroundState ground_state(const DiabaticModel& m);

/// Field-free Hamiltonian T + Vd applied on the Fourier grid.
Wavepacket apply_h0(const DiabaticModel& m, const Wavepacket& psi);

/// Periodic Fourier-grid kinetic matrix for n points spaced dr.
Eigen::MatrixXd fourier_kinetic(Eigen::Index n, double dr, double mass);

enum class Representation { diabatic, adiabatic };

/// Per-channel norms; the adiabatic variant rotates by D(R) first.
Eigen::VectorXd channel_populations(const DiabaticModel& m, const Wavepacket& psi, Representation rep);

struct GridRun {
  Wavepacket final_state;
  Eigen::VectorXd times;
  Eigen::MatrixXd diabatic;    ///< rows: recorded times, cols: channel populations
  Eigen::MatrixXd adiabatic;
  Eigen::MatrixXd absorbed;    ///< cumulative absorbed norm per channel
  Eigen::VectorXd norm;
};

/// Propagates over the pulse with backend step dt (dividing the pulse step),
/// recording every record_every-th pulse sample and the last one.
/// Throws ValidationError when dt * max kinetic energy >= pi/2 or when the
/// pointwise spread of Vd +- Md max|E| aliases at this dt.
GridRun propagate_grid(const DiabaticModel& m, const Wavepacket& psi0, const Pulse& p, double dt,
                       std::optional<Absorber> absorber, Eigen::Index record_every = 1);

}  // namespace zeroarea::gridfrag

#endif  // ZEROAREA_GRIDFRAG_PROPAGATOR_HPP
