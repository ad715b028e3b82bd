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

#pragma once

#include <optional>
#include <span>
#include <string>

#include "kkmds/graph.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

struct SvgOptions {
  const Graph* edges = nullptr;  // draw these edges when set
  std::span<const int> labels;   // colour index per vertex, optional
  std::string title;
  std::optional<double> normalized_stress;  // printed as a subtitle
};

// Scatter plot of the first two coordinates (one-dimensional layouts are
// drawn on a horizontal line).
std::string render_svg(const Layout& x, const SvgOptions& opt = {});

}  // namespace kkmds
