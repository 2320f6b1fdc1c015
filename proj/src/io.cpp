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

#include "qnoise/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

using nlohmann::json;

json angles_to_json(const AngleSchedule& angles) {
  return json{{"depth", angles.depth()}, {"gammas", angles.gammas}, {"betas", angles.betas}};
}

AngleSchedule angles_from_json(const json& j) {
  AngleSchedule angles;
  try {
    angles.gammas = j.at("gammas").get<std::vector<double>>();
    angles.betas = j.at("betas").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed angles json: ") + e.what());
  }
  validate(angles);
  return angles;
}

}  // namespace

void write_angles_json(const AngleSchedule& angles, std::ostream& out) {
  validate(angles);
  out << angles_to_json(angles).dump(2) << "\n";
}

AngleSchedule read_angles_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("angles file is not valid json: ") + e.what());
  }
  return angles_from_json(j);
}

AngleSchedule read_angles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open angles file: " + path);
  return read_angles_json(in);
}

void write_depth_angles_json(const std::map<int, DepthAngles>& per_depth, std::ostream& out) {
  json entries = json::array();
  for (const auto& [depth, entry] : per_depth) {
    json e = angles_to_json(entry.angles);
    e["depth"] = depth;
    e["cost"] = entry.cost;
    entries.push_back(std::move(e));
  }
  out << json{{"per_depth", entries}}.dump(2) << "\n";
}

void write_depth_angles_file(const std::map<int, DepthAngles>& per_depth,
                             const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  write_depth_angles_json(per_depth, out);
}

std::map<int, DepthAngles> read_depth_angles_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("angles file is not valid json: ") + e.what());
  }
  std::map<int, DepthAngles> per_depth;
  try {
    for (const auto& e : j.at("per_depth")) {
      DepthAngles entry;
      entry.angles = angles_from_json(e);
      entry.cost = e.value("cost", 0.0);
      per_depth[e.at("depth").get<int>()] = std::move(entry);
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed per-depth angles json: ") + e.what());
  }
  return per_depth;
}

std::map<int, DepthAngles> read_depth_angles_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open angles file: " + path);
  return read_depth_angles_json(in);
}

AngleSchedule parse_angles_inline(const std::string& text) {
  const auto semicolon = text.find(';');
  if (semicolon == std::string::npos) {
    throw ValidationError("inline angles must be 'g1,g2,...;b1,b2,...'");
  }
  auto parse_list = [](const std::string& part) {
    std::vector<double> values;
    std::stringstream stream(part);
    std::string token;
    while (std::getline(stream, token, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(token, &used));
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
          ++used;
        }
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ValidationError("bad angle value '" + token + "'");
      }
    }
    return values;
  };
  AngleSchedule angles;
  angles.gammas = parse_list(text.substr(0, semicolon));
  angles.betas = parse_list(text.substr(semicolon + 1));
  validate(angles);
  return angles;
}

}  // namespace qnoise
