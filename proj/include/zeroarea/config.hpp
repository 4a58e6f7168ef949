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

#ifndef ZEROAREA_CONFIG_HPP
#define ZEROAREA_CONFIG_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "zeroarea/control.hpp"

namespace zeroarea {

/// Sectioned key = value text:
///
///   # comment
///   [section]
///   key = value   # trailing comment
///
/// Keys are addressed as "section.key". Serialization is sorted, so
/// parse(serialize(c)) == c for every document.
class ConfigDocument {
 public:
  static ConfigDocument parse(const std::string& text, const std::string& origin = "<string>");
  static ConfigDocument read(const std::string& path);

  std::string serialize() const;
  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  void set(const std::string& key, const std::string& value);
  /// Applies "section.key=value".
  void apply_override(const std::string& assignment);
  std::vector<std::string> keys() const;

  bool operator==(const ConfigDocument&) const = default;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

enum class Backend { rotor, gridfrag };
enum class ControlMode { none, lct, oct };
enum class PulseSource { family, file, hermite, gaussian, zero };

std::string to_string(Backend b);
std::string to_string(ControlMode m);
std::string to_string(PulseSource s);
std::string to_string(AreaScheme s);

struct RotorSection {
  double b_cm1 = 1.9312;
  double dipole_au = 0.044;
  int jmax = 20;
  double temperature_K = 0.0;
  double tau_Tper = 0.95;
  /// +1 targets cos(theta) -> +1, -1 targets cos(theta) -> -1.
  double direction = -1.0;
  double shift = 1.0;
  double horizon_Tper = 1.0;

  bool operator==(const RotorSection&) const = default;
};

struct GridfragSection {
  std::string model_file;   ///< empty: synthetic model
  std::string params_file;  ///< synthetic parameters (optional)
  std::vector<int> channels{3};  ///< 1-based target channels
  double k_min_au = 6.0;
  double k_max_au = 24.0;
  int nk = 112;
  std::string set_file;  ///< scattering-set cache; built when missing
  double seed_eps = 0.05;
  double absorber_fraction = 0.1;
  double absorber_strength = 0.1;
  double moller_dt_au = 0.8;
  double window_wavelengths = 10.0;
  int record_every = 50;

  bool operator==(const GridfragSection&) const = default;
};

struct PulseSection {
  PulseSource source = PulseSource::family;
  double f_THz = 0.7;
  double delta_Tper = 0.14;
  double intensity_TWcm2 = 20.0;
  int samples = 5001;
  std::string file;
  std::array<double, 3> hermite{1.0, 1.0, 1.0};
  double width_Tper = 0.04;
  double center_Tper = 0.5;
  double duration_Tper = 1.0;
  double amplitude_au = 0.01;
  double omega_au = 0.3;
  double sigma_au = 100.0;
  double center_au = 400.0;
  double duration_au = 800.0;
  double dt_au = 0.2;

  bool operator==(const PulseSection&) const = default;
};

struct ControlSection {
  ControlConfig config;
  std::vector<double> mu_values;        ///< OCT sweep; empty: config.mu only
  std::vector<double> mu_tilde_values;  ///< LCT sweep; empty: config.mu_tilde only
  double lct_dt_au = 0.05;
  double filter_cutoff_au = 0.0;  ///< > 0: filter LCT/OCT output pulses

  bool operator==(const ControlSection& o) const;
};

struct ScanSection {
  double f_min_THz = 0.5;
  double f_max_THz = 3.0;
  int nf = 10;
  double delta_min_Tper = 0.12;
  double delta_max_Tper = 0.25;
  int nd = 10;
  double dt_au = 20.0;

  bool operator==(const ScanSection&) const = default;
};

struct SpectralSection {
  double cutoff_au = 0.0;
  double window_au = 0.0;  ///< 0: a tenth of the pulse duration
  int centers = 64;

  bool operator==(const SpectralSection&) const = default;
};

/// Typed run description. Physical inputs carry their unit in the key name
/// and are converted to atomic units once, by the accessors below.
struct RunConfig {
  Backend backend = Backend::rotor;
  ControlMode mode = ControlMode::none;
  RotorSection rotor;
  GridfragSection gridfrag;
  PulseSection pulse;
  ControlSection control;
  ScanSection scan;
  SpectralSection spectral;

  static RunConfig from_document(const ConfigDocument& doc);
  ConfigDocument to_document() const;
  /// Field-level checks; throws ValidationError("section.key: ...").
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

RunConfig load_run_config(const std::string& path, const std::vector<std::string>& overrides = {});

}  // namespace zeroarea

#endif  // ZEROAREA_CONFIG_HPP
