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

#ifndef ZEROAREA_UNITS_HPP
#define ZEROAREA_UNITS_HPP

#include <cmath>
#include <numbers>

/// Unit conversions. Everything inside the library is in atomic units;
/// the helpers here are the only place natural units are translated.
namespace zeroarea::units {

inline constexpr double pi = std::numbers::pi;

/// Hartree per cm^-1 (1 / 219474.6313632).
inline constexpr double hartree_per_wavenumber = 1.0 / 219474.6313632;
/// Atomic unit of time in seconds.
inline constexpr double au_time_seconds = 2.4188843265857e-17;
/// Atomic unit of time in femtoseconds.
inline constexpr double au_time_fs = 2.4188843265857e-2;
/// Boltzmann constant in cm^-1 per kelvin.
inline constexpr double boltzmann_wavenumber_per_kelvin = 0.69503476;
/// Boltzmann constant in hartree per kelvin.
inline constexpr double boltzmann_hartree_per_kelvin =
    boltzmann_wavenumber_per_kelvin * hartree_per_wavenumber;
/// Cycle-averaged intensity (W/cm^2) of a field of amplitude 1 a.u.
inline constexpr double intensity_per_field_squared = 3.50944506e16;
/// Unified atomic mass unit in electron masses.
inline constexpr double amu_electron_masses = 1822.888486;

inline constexpr double wavenumber_to_hartree(double cm1) { return cm1 * hartree_per_wavenumber; }
inline constexpr double hartree_to_wavenumber(double eh) { return eh / hartree_per_wavenumber; }

inline constexpr double fs_to_au(double fs) { return fs / au_time_fs; }
inline constexpr double au_to_fs(double t) { return t * au_time_fs; }
inline constexpr double ps_to_au(double ps) { return fs_to_au(1000.0 * ps); }

/// Ordinary frequency in THz to cycles per atomic time unit.
inline constexpr double thz_to_au(double thz) { return thz * 1e12 * au_time_seconds; }
inline constexpr double au_to_thz(double f) { return f / (1e12 * au_time_seconds); }

inline constexpr double kelvin_to_hartree(double kelvin) { return kelvin * boltzmann_hartree_per_kelvin; }

/// Peak field amplitude (a.u.) for a peak intensity in W/cm^2.
inline double intensity_to_field(double w_per_cm2) {
  return std::sqrt(w_per_cm2 / intensity_per_field_squared);
}
inline double tw_per_cm2_to_field(double tw) { return intensity_to_field(tw * 1e12); }
inline constexpr double field_to_intensity(double e0) { return intensity_per_field_squared * e0 * e0; }

/// Rigid-rotor revival period pi/B for B in hartree.
inline constexpr double rotor_period(double b_hartree) { return pi / b_hartree; }

}  // namespace zeroarea::units

#endif  // ZEROAREA_UNITS_HPP
