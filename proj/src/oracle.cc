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

#include "movecover/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "movecover/line_solver.h"

namespace movecover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Frame {
  std::vector<Point> targets;  // sorted by x, on y = 0
  std::vector<Station> stations;  // input order, |y|
};

Frame MakeFrame(const Instance& inst, const OracleLimits& limits) {
  CheckInstance(inst);
  if (!IsLineInstance(inst)) throw std::invalid_argument("oracles require targets on y = 0");
  const int n = static_cast<int>(inst.targets.size());
  const int m = static_cast<int>(inst.stations.size());
  if (n > limits.max_targets || m > limits.max_stations) {
    throw OracleGuardError("oracle limited to " + std::to_string(limits.max_targets) +
                           " targets and " + std::to_string(limits.max_stations) +
                           " stations, got " + std::to_string(n) + " and " + std::to_string(m));
  }
  if (n == 0) throw std::invalid_argument("instance has no targets");
  if (m == 0) throw std::invalid_argument("instance has no stations");
  Frame f;
  for (Point t : inst.targets) f.targets.push_back({t.x, 0.0});
  std::sort(f.targets.begin(), f.targets.end(), [](Point a, Point b) { return a.x < b.x; });
  for (Station s : inst.stations) {
    s.position.y = std::abs(s.position.y);
    f.stations.push_back(s);
  }
  return f;
}

struct Move {
  CandidatePosition candidate;
  int next = 0;     // first target index not covered by the jump
  int covered = 0;  // targets covered by the jump
};

// For each target index p, the candidates covering t_p and where they leave
// the sweep.
std::vector<std::vector<Move>> MovesFrom(const std::vector<CandidatePosition>& candidates,
                                         const std::vector<Point>& targets) {
  const int n = static_cast<int>(targets.size());
  std::vector<std::vector<Move>> moves(n);
  for (int p = 0; p < n; ++p) {
    const double x = targets[p].x;
    for (const CandidatePosition& c : candidates) {
      if (x < c.span_lo - kGeomTol || x > c.span_hi + kGeomTol) continue;
      int q = p + 1;
      while (q < n && targets[q].x <= c.span_hi + kGeomTol) ++q;
      moves[p].push_back({c, q, q - p});
    }
  }
  return moves;
}

using CandidateFn = std::vector<CandidatePosition> (*)(const Station&, int, std::span<const Point>,
                                                       double);

std::vector<CandidatePosition> UnionOfCandidates(const Frame& frame, unsigned mask, double radius,
                                                 CandidateFn make) {
  std::vector<CandidatePosition> all;
  for (int k = 0; k < static_cast<int>(frame.stations.size()); ++k) {
    if (!(mask & (1u << k))) continue;
    for (auto& c : make(frame.stations[k], k, frame.targets, radius)) all.push_back(c);
  }
  return all;
}

Solution ToSolution(const Instance& inst, const std::vector<CandidatePosition>& chosen) {
  Solution sol;
  std::set<int> opened;
  for (const CandidatePosition& c : chosen) {
    SensorPlacement p{c.station, c.center};
    if (inst.stations[c.station].position.y < 0.0) p.center.y = -p.center.y;
    sol.sensors.push_back(p);
    opened.insert(c.station);
  }
  sol.opened.assign(opened.begin(), opened.end());
  RecomputeCosts(inst, sol);
  return sol;
}

// Full coverage sweep over the union of every subset's candidates.
Solution SweepAllSubsets(const Instance& inst, const Frame& frame, CandidateFn make) {
  const int n = static_cast<int>(frame.targets.size());
  const int m = static_cast<int>(frame.stations.size());
  double best_total = kInf;
  std::vector<CandidatePosition> best_sensors;

  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double opening = 0.0;
    for (int k = 0; k < m; ++k) {
      if (mask & (1u << k)) opening += frame.stations[k].opening_cost;
    }
    const auto moves = MovesFrom(UnionOfCandidates(frame, mask, inst.radius, make), frame.targets);
    std::vector<double> cost(n + 1, kInf);
    std::vector<const Move*> pick(n + 1, nullptr);
    cost[n] = 0.0;
    for (int p = n - 1; p >= 0; --p) {
      for (const Move& mv : moves[p]) {
        const double v = mv.candidate.move_distance + cost[mv.next];
        if (v < cost[p]) {
          cost[p] = v;
          pick[p] = &mv;
        }
      }
    }
    if (opening + cost[0] < best_total) {
      best_total = opening + cost[0];
      best_sensors.clear();
      for (int p = 0; p < n; p = pick[p]->next) best_sensors.push_back(pick[p]->candidate);
    }
  }
  return ToSolution(inst, best_sensors);
}

}  // namespace

Solution OracleLine(const Instance& inst, const OracleLimits& limits) {
  const Frame frame = MakeFrame(inst, limits);
  return SweepAllSubsets(inst, frame, &CandidatePositionsLine);
}

Solution OraclePartial(const Instance& inst, int required, const OracleLimits& limits) {
  const Frame frame = MakeFrame(inst, limits);
  const int n = static_cast<int>(frame.targets.size());
  const int m = static_cast<int>(frame.stations.size());
  if (required < 0 || required > n) throw std::invalid_argument("required coverage must lie in [0, n]");
  if (required == 0) return Solution{};

  double best_total = kInf;
  std::vector<CandidatePosition> best_sensors;
  const auto at = [&](int p, int need) { return static_cast<size_t>(p) * (required + 1) + need; };

  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    double opening = 0.0;
    for (int k = 0; k < m; ++k) {
      if (mask & (1u << k)) opening += frame.stations[k].opening_cost;
    }
    const auto moves =
        MovesFrom(UnionOfCandidates(frame, mask, inst.radius, &CandidatePositionsLine), frame.targets);
    // cost[p][need]: cheapest way to cover `need` more targets among p..n-1.
    std::vector<double> cost((n + 1) * static_cast<size_t>(required + 1), kInf);
    std::vector<const Move*> pick(cost.size(), nullptr);
    for (int p = 0; p <= n; ++p) cost[at(p, 0)] = 0.0;
    for (int p = n - 1; p >= 0; --p) {
      for (int need = 1; need <= required; ++need) {
        double best = cost[at(p + 1, need)];
        const Move* choice = nullptr;
        for (const Move& mv : moves[p]) {
          const double v =
              mv.candidate.move_distance + cost[at(mv.next, std::max(0, need - mv.covered))];
          if (v < best) {
            best = v;
            choice = &mv;
          }
        }
        cost[at(p, need)] = best;
        pick[at(p, need)] = choice;
      }
    }
    if (opening + cost[at(0, required)] < best_total) {
      best_total = opening + cost[at(0, required)];
      best_sensors.clear();
      for (int p = 0, need = required; need > 0;) {
        const Move* mv = pick[at(p, need)];
        if (mv == nullptr) {
          ++p;
          continue;
        }
        best_sensors.push_back(mv->candidate);
        need = std::max(0, need - mv->covered);
        p = mv->next;
      }
    }
  }
  if (std::isinf(best_total)) throw InfeasibleError("required coverage is unreachable");
  return ToSolution(inst, best_sensors);
}

Solution OracleGeneral(const Instance& inst, const OracleLimits& limits) {
  const Frame frame = MakeFrame(inst, limits);
  const Solution sol = SweepAllSubsets(inst, frame, &CandidatePositionsGeneral);

  constexpr double kPitch = 1e-3;
  for (size_t s = 0; s < sol.sensors.size(); ++s) {
    for (int dx = -8; dx <= 8; ++dx) {
      for (int dy = -8; dy <= 8; ++dy) {
        if (dx == 0 && dy == 0) continue;
        Solution moved = sol;
        moved.sensors[s].center.x += dx * kPitch;
        moved.sensors[s].center.y += dy * kPitch;
        RecomputeCosts(inst, moved);
        if (moved.total_cost < sol.total_cost - 1e-6 && ValidateSolution(inst, moved).feasible) {
          throw OracleFailure("perturbing sensor " + std::to_string(s) +
                              " yields a cheaper feasible solution");
        }
      }
    }
  }
  return sol;
}

}  // namespace movecover
