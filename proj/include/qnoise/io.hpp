// Copyright 2026 The qnoise authors
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

#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "qnoise/state.hpp"

namespace qnoise {

// Angle schedule JSON: {"depth": d, "gammas": [...], "betas": [...]}.
void write_angles_json(const AngleSchedule& angles, std::ostream& out);
AngleSchedule read_angles_json(std::istream& in);
AngleSchedule read_angles_file(const std::string& path);

// Per-depth schedules with the noiseless cost reached at each depth:
// {"per_depth": [{"depth": d, "gammas": [...], "betas": [...], "cost": c}]}.
struct DepthAngles {
  AngleSchedule angles;
  double cost = 0.0;
};
void write_depth_angles_json(const std::map<int, DepthAngles>& per_depth, std::ostream& out);
void write_depth_angles_file(const std::map<int, DepthAngles>& per_depth,
                             const std::string& path);
std::map<int, DepthAngles> read_depth_angles_json(std::istream& in);
std::map<int, DepthAngles> read_depth_angles_file(const std::string& path);

/// Parses "g1,g2,...;b1,b2,..." (radians) into a schedule.
AngleSchedule parse_angles_inline(const std::string& text);

}  // namespace qnoise
