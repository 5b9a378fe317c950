// Copyright 2026 The gr2sim Authors
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

#include "gr2/error.hpp"

namespace gr2 {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonPhysicalInput: return "NonPhysicalInput";
    case ErrorCode::DegenerateB: return "DegenerateB";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace gr2
