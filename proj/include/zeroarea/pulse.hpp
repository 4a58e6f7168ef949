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

#ifndef ZEROAREA_PULSE_HPP
#define ZEROAREA_PULSE_HPP

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "zeroarea/units.hpp"

namespace zeroarea {

/// A real, linearly polarized control field sampled on a uniform grid
/// t_n = t0 + n*dt. Immutable once constructed.
class Pulse {
 public:
  Pulse(double t0, double dt, Eigen::VectorXd samples);

  /// Constant-zero field with n samples.
  static Pulse zeros(double t0, double dt, Eigen::Index n);

  double t0() const { return t0_; }
  double dt() const { return dt_; }
  Eigen::Index size() const { return samples_.size(); }
  double time(Eigen::Index n) const { return t0_ + static_cast<double>(n) * dt_; }
  double t_end() const { return time(size() - 1); }
  double duration() const { return t_end() - t0_; }
  const Eigen::VectorXd& samples() const { return samples_; }
  double operator[](Eigen::Index n) const { return samples_[n]; }
  double max_abs() const { return samples_.cwiseAbs().maxCoeff(); }
  Eigen::VectorXd times() const;

  /// Same grid, new values.
  Pulse with_samples(Eigen::VectorXd samples) const { return Pulse(t0_, dt_, std::move(samples)); }
  /// Same values, time origin moved to t0.
  Pulse shifted_to(double t0) const { return Pulse(t0, dt_, samples_); }

 private:
  double t0_;
  double dt_;
  Eigen::VectorXd samples_;
};

/// Field value of the closed-form zero-area family
/// E0 cos^2(pi t/delta) sin(2 pi f t) on [-delta/2, delta/2], zero outside.
template <typename Scalar>
Scalar family_field(Scalar e0, Scalar delta, Scalar f, Scalar t) {
  using std::abs;
  using std::cos;
  using std::sin;
  if (abs(t) > delta / Scalar(2)) return Scalar(0);
  const Scalar c = cos(Scalar(units::pi) * t / delta);
  return e0 * c * c * sin(Scalar(2) * Scalar(units::pi) * f * t);
}

/// Switch-on/off envelope sin^2(pi t/tf) for t in [0, tf].
template <typename Scalar>
Scalar envelope_S(Scalar t, Scalar tf) {
  using std::sin;
  const Scalar s = sin(Scalar(units::pi) * t / tf);
  return s * s;
}

/// Checked variant: rejects t outside [0, tf].
double envelope(double t, double tf);

/// Physicists' Hermite polynomial H_n(u).
template <typename Scalar>
Scalar hermite_polynomial(int n, Scalar u) {
  Scalar h0 = Scalar(1);
  if (n == 0) return h0;
  Scalar h1 = Scalar(2) * u;
  for (int k = 1; k < n; ++k) {
    Scalar h2 = Scalar(2) * u * h1 - Scalar(2 * k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// Evaluates the family on n_samples points spanning [-delta/2, delta/2].
/// Both endpoints are exactly zero.
Pulse sample_family(double e0, double delta, double f, Eigen::Index n_samples);

struct AreaResult {
  double total = 0.0;
  Eigen::VectorXd running;  ///< running[n] = trapezoid integral over [t0, t_n]
};

/// Composite trapezoid area; this quadrature is used wherever the area enters.
AreaResult area(const Pulse& p);
double total_area(const Pulse& p);
/// Trapezoid integral of E^2 (fluence in a.u.).
double field_energy(const Pulse& p);

/// Discrete spectrum of a pulse.
///
/// The N samples are treated as one period of length (N-1)*dt, with the first
/// sample replaced by the mean of the two endpoints. Amplitudes are
///   F(w_k) = dt * sum_{n<N-1} E'_n exp(-i w_k (t_n - t0)),  w_k = 2 pi k / ((N-1) dt),
/// so F(0) equals the trapezoid area exactly, and Parseval reads
///   dt * sum |E'_n|^2 = (dw / 2 pi) * sum |F_k|^2.
/// Frequencies are stored in ascending order (negative first).
struct Spectrum {
  Eigen::VectorXd frequencies;
  Eigen::VectorXcd amplitudes;

  Eigen::Index zero_index() const;
  double d_omega() const { return frequencies.size() > 1 ? frequencies[1] - frequencies[0] : 0.0; }
};

Spectrum spectrum(const Pulse& p);
/// Energy of the periodized sequence used by spectrum(), dt * sum |E'_n|^2.
double periodic_energy(const Pulse& p);

/// Removes every spectral component with |w| < cutoff (hard mask, DC included).
/// The returned pulse has zero trapezoid area to rounding.
Pulse filter_low_frequencies(const Pulse& p, double cutoff);

struct Spectrogram {
  double window_width = 0.0;
  Eigen::VectorXd time_centers;
  Eigen::VectorXd frequencies;  ///< non-negative angular frequencies
  Eigen::MatrixXd magnitudes;   ///< rows: time centers, cols: frequencies; global max = 1
};

/// Gaussian-windowed short-time transform with sigma = window_width / 4.
Spectrogram spectrogram(const Pulse& p, double window_width, Eigen::Index n_centers);

/// Sum of odd-order Gauss-Hermite functions sum_k c_k H_k(u) exp(-u^2) for
/// k = 1, 3, 5, u = (t - center) / width, sampled on [t0, tf]. Odd in u, so
/// the analytic area about `center` vanishes.
Pulse hermite_guess(const std::array<double, 3>& coeffs, double width, double center, double t0,
                    double tf, Eigen::Index n_samples);

/// Rescales a pulse so that max|E| equals `peak`.
Pulse scale_to_peak(const Pulse& p, double peak);

/// Carrier-modulated Gaussian exp(-(t-tc)^2 / (2 s^2)) sin(w (t - tc)), odd about
/// tc and therefore of zero analytic area.
Pulse zero_area_gaussian(double amplitude, double omega, double sigma, double center, double t0,
                         double tf, Eigen::Index n_samples);

/// Linear resampling of arbitrary (t, E) pairs onto a uniform grid.
Pulse resample_uniform(const Eigen::VectorXd& times, const Eigen::VectorXd& values, double dt);

}  // namespace zeroarea

#endif  // ZEROAREA_PULSE_HPP
