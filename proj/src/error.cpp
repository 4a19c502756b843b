// Copyright 2026 The gcluster Authors
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

#include "gcluster/error.hpp"

namespace gcluster {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::GaugeIncompatible: return "GaugeIncompatible";
    case ErrorCode::SingularPhasePoint: return "SingularPhasePoint";
    case ErrorCode::NonRealResult: return "NonRealResult";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SqueezingOutOfRange: return "SqueezingOutOfRange";
  }
  return "Unknown";
}

}  // namespace gcluster
