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

// Exact solvers for instances whose targets lie on the line y = 0.
//
// All three solvers share a bi-level dynamic program. The outer level walks
// the stations in ascending x and decides which consecutive block of targets
// (if any) each station serves:
//
//   c(k, i) = min{ c(k-1, i),  min_j c(k-1, i-j) + cost_k + d_k(i-j+1, i) }
//   c(k, 0) = 0,  c(0, i) = inf for i > 0.
//
// The inner level d_k(l, i) is the cheapest way for station k alone to cover
// targets l..i with sensors restricted to a finite candidate set:
//
//   d_k(l, i) = min over candidates s covering t_i of move(s) + d_k(l, i'_s)
//
// where i'_s is the last target strictly left of the sensor's covered span.
// Candidate sets differ per solver: sensors on the line (target on the left
// or right coverage boundary, or the vertical drop) for SolveLineExact and
// SolveLinePartial, and arbitrary upper-half-plane centers for
// SolveLineGeneral.

#ifndef MOVECOVER_LINE_SOLVER_H_
#define MOVECOVER_LINE_SOLVER_H_

#include <limits>
#include <span>
#include <vector>

#include "movecover/geometry.h"
#include "movecover/instance.h"

namespace movecover {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct CandidatePosition {
  int station = 0;
  Point center;
  double move_distance = 0.0;
  // x-interval of line points within the sensor's radius.
  double span_lo = 0.0;
  double span_hi = 0.0;
  // Indices (into the target span the candidate was generated from) of the
  // targets that define it; the vertical drop has none (first > last).
  int first_generator = 0;
  int last_generator = -1;
};

// On-line candidates for `station` serving `targets` (sorted by x, on y = 0):
// x(t) + r and x(t) - r for every target, then the vertical drop x(station).
// Always 2 * targets.size() + 1 entries, duplicates kept.
std::vector<CandidatePosition> CandidatePositionsLine(const Station& station, int station_index,
                                                      std::span<const Point> targets,
                                                      double radius);

// Off-line candidates for a station with y >= 0. For every target the point
// of its radius circle nearest the station (or the station itself when it
// already covers the target); for every target pair within 2r the
// intersection points of their radius circles with y >= 0.
std::vector<CandidatePosition> CandidatePositionsGeneral(const Station& station, int station_index,
                                                         std::span<const Point> targets,
                                                         double radius);

// d_k(l, i) for one station over all intervals of the sorted targets, with
// back-pointers. Indices are 0-based; Value(l, l - 1) == 0.
class InnerTable {
 public:
  InnerTable(std::vector<CandidatePosition> candidates, std::span<const Point> targets);

  int size() const { return n_; }
  double Value(int l, int i) const;
  int SensorCount(int l, int i) const;
  // Sensor centers of an optimal cover of l..i, right to left.
  std::vector<CandidatePosition> Reconstruct(int l, int i) const;

  const std::vector<CandidatePosition>& candidates() const { return candidates_; }

 private:
  size_t Slot(int l, int i) const { return static_cast<size_t>(l) * (n_ + 1) + (i + 1); }

  int n_;
  std::vector<CandidatePosition> candidates_;
  std::vector<int> below_;  // last target index strictly left of each candidate's span
  std::vector<double> value_;
  std::vector<int> sensors_;
  std::vector<int> choice_;
};

// d_k(l, i, K): cheapest cover of at least K of the targets l..i by one
// station's sensors, K in [0, max_required].
class PartialInnerTable {
 public:
  PartialInnerTable(std::vector<CandidatePosition> candidates, std::span<const Point> targets,
                    int max_required);

  int size() const { return n_; }
  int max_required() const { return kmax_; }
  double Value(int l, int i, int required) const;
  int SensorCount(int l, int i, int required) const;
  std::vector<CandidatePosition> Reconstruct(int l, int i, int required) const;

 private:
  size_t Slot(int l, int i, int required) const {
    return (static_cast<size_t>(l) * (n_ + 1) + (i + 1)) * (kmax_ + 1) + required;
  }

  int n_;
  int kmax_;
  std::vector<CandidatePosition> candidates_;
  std::vector<int> below_;
  std::vector<double> value_;
  std::vector<int> sensors_;
  std::vector<int> choice_;  // -1: skip t_i, -2: nothing required
};

// Thrown when no feasible cover exists (e.g. no stations).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimum-cost cover with sensor centers on the line. Targets must be on
// y = 0; stations may be on either side.
Solution SolveLineExact(const Instance& inst);

// Minimum-cost solution covering at least `required` targets, 0 <= required
// <= n. Throws std::invalid_argument when out of range.
Solution SolveLinePartial(const Instance& inst, int required);

// Minimum-cost cover with sensor centers anywhere in the plane.
Solution SolveLineGeneral(const Instance& inst);

}  // namespace movecover

#endif  // MOVECOVER_LINE_SOLVER_H_
