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

#include <stdexcept>
#include <string>

namespace kkmds {

// Numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kParameter = 1,
  kParse = 2,
  kInvariant = 3,
  kResource = 4,
  kIo = 5,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void throw_parameter(const std::string& what);
[[noreturn]] void throw_parse(const std::string& what);
[[noreturn]] void throw_invariant(const std::string& what);
[[noreturn]] void throw_resource(const std::string& what);
[[noreturn]] void throw_io(const std::string& what);

const char* error_code_name(ErrorCode code) noexcept;

}  // namespace kkmds
