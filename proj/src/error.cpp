// Copyright 2026 The cpforge Authors.
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


#include "cpforge/error.hpp"

namespace cpforge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::UnsupportedLimit: return "unsupported limit";
    case ErrorCode::MissingIndex: return "missing Matsubara index";
    case ErrorCode::QuadratureFailure: return "quadrature failure";
    case ErrorCode::TruncationFailure: return "truncation failure";
    case ErrorCode::ZeroReference: return "zero reference";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

}  // namespace cpforge
