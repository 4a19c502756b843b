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

#pragma once

namespace gcluster {

// Every numerical threshold used by the library lives here. Residual checks
// are max-entry moduli; "relative" tolerances are scaled by the max-entry
// modulus of the reference matrix.
struct Tolerances {
  double rtol = 1e-9;             // algebraic identities (relative)
  double oracle = 1e-8;           // closed form vs matrix-exponential oracle
  double singular = 1e-10;        // sigma_min >= singular * sigma_max
  double degeneracy = 1e-8;       // eigenvalue gap treated as degenerate (relative)
  double input_symmetry = 1e-12;  // graph / adjacency asymmetry on input
  double phase_accept = 1e-6;     // regular-phase search: accept
  double phase_floor = 1e-8;      // regular-phase search: best-effort floor
  double max_squeezing = 30.0;    // cap on z * lambda_max(P) in the oracle
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace gcluster
