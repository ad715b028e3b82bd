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

#include "kkmds/error.hpp"

namespace kkmds {

void throw_parameter(const std::string& what) { throw Error(ErrorCode::kParameter, what); }
void throw_parse(const std::string& what) { throw Error(ErrorCode::kParse, what); }
void throw_invariant(const std::string& what) { throw Error(ErrorCode::kInvariant, what); }
void throw_resource(const std::string& what) { throw Error(ErrorCode::kResource, what); }
void throw_io(const std::string& what) { throw Error(ErrorCode::kIo, what); }

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParameter: return "parameter error";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kInvariant: return "invariant violation";
    case ErrorCode::kResource: return "resource guard";
    case ErrorCode::kIo: return "i/o error";
  }
  return "error";
}

}  // namespace kkmds
