// Copyright 2026 The kkmds Authors
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

#include <json.hpp>

#include "kkmds/error.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

using nlohmann::json;

std::string layout_to_json(const Layout& x, double stress_value) {
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto p = x.point(i);
    points.push_back(std::vector<double>(p.begin(), p.end()));
  }
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["dim"] = x.dim();
  j["points"] = std::move(points);
  j["stress"] = stress_value;
  j["normalized_stress"] = normalized_stress(stress_value, x.size());
  return j.dump(2) + "\n";
}

std::string layout_to_json(const Layout& x, const DistanceMatrix& d) {
  return layout_to_json(x, stress(x, d));
}

Layout layout_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw_parse(std::string("layout JSON: ") + e.what());
  }
  try {
    if (j.contains("format") && j.at("format").get<int>() != 1) throw_parse("layout JSON: unsupported format");
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& pts = j.at("points");
    if (!pts.is_array()) throw_parse("layout JSON: points must be an array");
    std::vector<double> coords;
    coords.reserve(pts.size() * dim);
    for (const auto& p : pts) {
      const auto v = p.get<std::vector<double>>();
      if (v.size() != dim) throw_parse("layout JSON: point has wrong dimension");
      coords.insert(coords.end(), v.begin(), v.end());
    }
    return Layout(pts.size(), dim, std::move(coords));
  } catch (const json::exception& e) {
    throw_parse(std::string("layout JSON: ") + e.what());
  }
}

}  // namespace kkmds
