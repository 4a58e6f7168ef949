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

#ifndef ZEROAREA_GRIDFRAG_MODEL_HPP
#define ZEROAREA_GRIDFRAG_MODEL_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace zeroarea::gridfrag {

/// Electronic structure of a diatomic on a uniform radial grid, adiabatic
/// representation. Matrices are indexed [grid point](i, j).
struct AdiabaticModel {
  Eigen::VectorXd r;
  double mass = 0.0;
  Eigen::MatrixXd va;               ///< rows: grid points, cols: channels
  std::vector<Eigen::MatrixXd> f;   ///< radial nonadiabatic couplings, antisymmetric
  std::vector<Eigen::MatrixXd> ma;  ///< dipole matrices, symmetric

  Eigen::Index points() const { return r.size(); }
  Eigen::Index channels() const { return va.cols(); }
  double dr() const { return r[1] - r[0]; }

  /// Checks shape, finiteness, grid uniformity, F antisymmetry, dipole symmetry
  /// and asymptotic flatness. Throws ValidationError.
  void validate(double flat_tol = 1e-4) const;
};

struct DiabaticModel {
  Eigen::VectorXd r;
  double mass = 0.0;
  Eigen::MatrixXd va;               ///< adiabatic curves kept for state preparation
  std::vector<Eigen::MatrixXd> vd;  ///< symmetric potential matrices
  std::vector<Eigen::MatrixXd> md;  ///< symmetric dipole matrices
  std::vector<Eigen::MatrixXd> d;   ///< adiabatic-from-diabatic rotations

  Eigen::Index points() const { return r.size(); }
  Eigen::Index channels() const { return va.cols(); }
  double dr() const { return r[1] - r[0]; }
  /// Diagonal potential in the last grid point.
  Eigen::VectorXd asymptotes() const { return va.row(points() - 1).transpose(); }
};

/// Integrates dD/dR + F D = 0 inward from D(R_max) = I with a classical
/// fourth-order stepper (F linearly interpolated inside each cell, cells split
/// so that |F| dR per substep stays near 0.01), then
/// Vd = D^T diag(Va) D and Md = D^T Ma D.
DiabaticModel diabatize(const AdiabaticModel& m);

/// Parameters of the shipped three-channel benchmark: one Morse ground curve
/// and two repulsive exponential curves coupled by a Gaussian F_23.
struct SyntheticParams {
  double mass = 1467.6;
  double r_min = 0.8;
  double r_max = 40.8;
  int points = 512;
  double de = 0.075, re = 1.46, alpha = 1.45;
  double v2_inf = 0.20, v2_amp = 0.10, v2_decay = 1.5;
  double v3_inf = 0.22, v3_amp = 0.12, v3_decay = 1.2;
  double f23_amp = 1.0, f23_center = 3.5, f23_width = 0.4;
  double mu11_amp = 0.3, mu11_decay = 0.5;
  double mu12_amp = 0.6, mu13_amp = 0.3, mu23_amp = 0.1, mu_width = 1.3;
  double mu22 = 0.2, mu33 = -0.2;
};

/// Reads key = value lines ('#' comments). Unknown keys are errors.
SyntheticParams read_synthetic_params(const std::string& path);
SyntheticParams parse_synthetic_params(const std::string& text, const std::string& origin);
AdiabaticModel synthetic_model(const SyntheticParams& p = {});

/// Columnar model file:
///   # zeroarea adiabatic model
///   # channels N
///   # mass <a.u.>
///   # units au
///   R  V_1..V_N  F_ij  M_ij
/// with F and M given either as upper triangles including the diagonal
/// (row-major, N(N+1)/2 columns each) or as full row-major N x N blocks.
AdiabaticModel read_adiabatic_model(const std::string& path);
AdiabaticModel parse_adiabatic_model(const std::string& text, const std::string& origin);
void write_adiabatic_model(const std::string& path, const AdiabaticModel& m);

/// One defect found by check_model_file.
struct ModelDefect {
  int line = 0;  ///< 0 for whole-file defects
  std::string message;
};

/// Lists every defect (asymmetry, NaN, bad column count, non-uniform grid)
/// instead of stopping at the first one.
std::vector<ModelDefect> check_model_text(const std::string& text);

}  // namespace zeroarea::gridfrag

#endif  // ZEROAREA_GRIDFRAG_MODEL_HPP
