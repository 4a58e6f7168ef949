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

#ifndef ZEROAREA_PULSE_IO_HPP
#define ZEROAREA_PULSE_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "zeroarea/pulse.hpp"

namespace zeroarea {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Writes "time_au value_au" lines with 17 significant digits. The header
/// carries t0 and dt so that reading back reproduces the pulse bit for bit.
void write_pulse(const std::string& path, const Pulse& p, const Metadata& meta = {});
std::string format_pulse(const Pulse& p, const Metadata& meta = {});

struct PulseFile {
  Pulse pulse;
  Metadata meta;
  bool resampled = false;
};

/// Reads a pulse file. Files without a dt header are checked for uniform
/// spacing and resampled linearly onto the mean spacing otherwise.
PulseFile read_pulse(const std::string& path);
PulseFile parse_pulse(const std::string& text, const std::string& origin = "<string>");

/// Round-trip safe decimal rendering (%.17g).
std::string format_double(double v);

}  // namespace zeroarea

#endif  // ZEROAREA_PULSE_IO_HPP
