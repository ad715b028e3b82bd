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

#include <functional>
#include <string_view>

#include "kkmds/graph.hpp"
#include "kkmds/stress.hpp"

namespace kkmds {

// Called with every layout an embedding method returns. Test harnesses use it
// to assert global properties (such as the energy lower bound) on all outputs.
using LayoutHook = std::function<void(std::string_view method, const Layout&, const DistanceMatrix&)>;

// Replaces the current hook; pass an empty function to clear it.
void set_layout_hook(LayoutHook hook);
void notify_layout(std::string_view method, const Layout& x, const DistanceMatrix& d);

}  // namespace kkmds
