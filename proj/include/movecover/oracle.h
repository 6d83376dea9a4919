// Copyright 2026 The movecover Authors
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

// Exhaustive reference solvers for small line instances.
//
// Each oracle enumerates every subset of stations to open and then runs a
// left-to-right sweep over the union of all opened stations' candidate
// positions: the state is the leftmost uncovered target and any candidate
// from any opened station may cover it next. Nothing assumes that a station
// serves a contiguous block of targets, so agreement with the dynamic
// programs is evidence for that structural property rather than a
// consequence of it.

#ifndef MOVECOVER_ORACLE_H_
#define MOVECOVER_ORACLE_H_

#include <stdexcept>

#include "movecover/instance.h"

namespace movecover {

struct OracleLimits {
  int max_targets = 10;
  int max_stations = 4;
};

class OracleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by OracleGeneral when a local perturbation of its answer is both
// feasible and cheaper, i.e. the candidate set missed an optimum.
class OracleFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Solution OracleLine(const Instance& inst, const OracleLimits& limits = {});

// At least `required` targets covered. Each step either skips the leftmost
// undecided target or covers it with a candidate, jumping past everything
// that candidate covers.
Solution OraclePartial(const Instance& inst, int required, const OracleLimits& limits = {});

// Off-line sensor centers. Afterwards every sensor is moved over a 17x17
// grid of pitch 1e-3 around its center; a feasible improvement of more than
// 1e-6 throws OracleFailure.
Solution OracleGeneral(const Instance& inst, const OracleLimits& limits = {});

}  // namespace movecover

#endif  // MOVECOVER_ORACLE_H_
