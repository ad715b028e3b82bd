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

#include "kkmds/hooks.hpp"

#include <mutex>

namespace kkmds {

namespace {
std::mutex g_hook_mutex;
LayoutHook g_hook;
}  // namespace

void set_layout_hook(LayoutHook hook) {
  std::lock_guard lock(g_hook_mutex);
  g_hook = std::move(hook);
}

void notify_layout(std::string_view method, const Layout& x, const DistanceMatrix& d) {
  LayoutHook hook;
  {
    std::lock_guard lock(g_hook_mutex);
    hook = g_hook;
  }
  if (hook) hook(method, x, d);
}

}  // namespace kkmds
