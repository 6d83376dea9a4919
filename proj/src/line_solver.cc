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

#include "movecover/line_solver.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace movecover {

namespace {

// Lexicographic objective used to break cost ties deterministically: fewer
// opened stations, then fewer sensors.
struct Score {
  double cost = 0.0;
  int opened = 0;
  int sensors = 0;
};

bool Better(const Score& a, const Score& b) {
  if (std::isinf(b.cost)) return !std::isinf(a.cost);
  if (std::isinf(a.cost)) return false;
  const double tol = 1e-12 * std::max({1.0, std::abs(a.cost), std::abs(b.cost)});
  if (a.cost < b.cost - tol) return true;
  if (a.cost > b.cost + tol) return false;
  return std::tie(a.opened, a.sensors) < std::tie(b.opened, b.sensors);
}

bool Covers(const CandidatePosition& c, double x) {
  return x >= c.span_lo - kGeomTol && x <= c.span_hi + kGeomTol;
}

bool InInterval(const CandidatePosition& c, int l, int i) {
  if (c.first_generator > c.last_generator) return true;  // vertical drop
  return c.first_generator >= l && c.last_generator <= i;
}

// Last index whose target lies strictly left of the candidate's span, or -1.
std::vector<int> LastTargetBelow(const std::vector<CandidatePosition>& candidates,
                                 std::span<const Point> targets) {
  std::vector<int> below(candidates.size());
  for (size_t c = 0; c < candidates.size(); ++c) {
    const double limit = candidates[c].span_lo - kGeomTol;
    const auto it = std::lower_bound(targets.begin(), targets.end(), limit,
                                     [](Point t, double v) { return t.x < v; });
    below[c] = static_cast<int>(it - targets.begin()) - 1;
  }
  return below;
}

std::vector<std::vector<int>> CoveringLists(const std::vector<CandidatePosition>& candidates,
                                            std::span<const Point> targets) {
  std::vector<std::vector<int>> lists(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) {
    for (size_t c = 0; c < candidates.size(); ++c) {
      if (Covers(candidates[c], targets[i].x)) lists[i].push_back(static_cast<int>(c));
    }
  }
  return lists;
}

CandidatePosition MakeCandidate(const Station& station, int station_index, Point center,
                                double half_width, int first, int last) {
  CandidatePosition c;
  c.station = station_index;
  c.center = center;
  c.move_distance = Distance(station.position, center);
  c.span_lo = center.x - half_width;
  c.span_hi = center.x + half_width;
  c.first_generator = first;
  c.last_generator = last;
  return c;
}

// Sorted, reflected view of a line instance.
struct LineSetup {
  double radius = 1.0;
  std::vector<Point> targets;  // sorted by x, y forced to 0
  std::vector<Station> stations;  // |y|, sorted by x
  std::vector<int> station_order;  // sorted position -> input index
  std::vector<bool> flipped;  // input station had y < 0
};

LineSetup PrepareLine(const Instance& inst) {
  CheckInstance(inst);
  if (!IsLineInstance(inst)) {
    throw std::invalid_argument("line solvers require every target on y = 0");
  }
  if (inst.targets.empty()) throw std::invalid_argument("instance has no targets");
  if (inst.stations.empty()) throw InfeasibleError("instance has no stations");

  LineSetup setup;
  setup.radius = inst.radius;
  std::vector<int> order(inst.targets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.targets[a].x < inst.targets[b].x; });
  for (int t : order) setup.targets.push_back({inst.targets[t].x, 0.0});

  setup.station_order.resize(inst.stations.size());
  std::iota(setup.station_order.begin(), setup.station_order.end(), 0);
  std::stable_sort(setup.station_order.begin(), setup.station_order.end(), [&](int a, int b) {
    return inst.stations[a].position.x < inst.stations[b].position.x;
  });
  for (int k : setup.station_order) {
    Station s = inst.stations[k];
    setup.flipped.push_back(s.position.y < 0.0);
    s.position.y = std::abs(s.position.y);
    setup.stations.push_back(s);
  }
  return setup;
}

// Maps sensors found in the reflected, sorted frame back to the input.
Solution BuildSolution(const Instance& inst, const LineSetup& setup, std::vector<int> opened_sorted,
                       const std::vector<CandidatePosition>& sensors) {
  Solution sol;
  for (int k : opened_sorted) sol.opened.push_back(setup.station_order[k]);
  std::sort(sol.opened.begin(), sol.opened.end());
  for (const CandidatePosition& c : sensors) {
    SensorPlacement p;
    p.station = setup.station_order[c.station];
    p.center = c.center;
    if (setup.flipped[c.station]) p.center.y = -p.center.y;
    sol.sensors.push_back(p);
  }
  std::sort(sol.sensors.begin(), sol.sensors.end(),
            [](const SensorPlacement& a, const SensorPlacement& b) {
              return std::tie(a.center.x, a.center.y, a.station) <
                     std::tie(b.center.x, b.center.y, b.station);
            });
  RecomputeCosts(inst, sol);
  return sol;
}

using CandidateFn = std::vector<CandidatePosition> (*)(const Station&, int, std::span<const Point>,
                                                       double);

// Shared full-coverage outer DP; `make_candidates` selects the variant.
Solution SolveBiLevel(const Instance& inst, CandidateFn make_candidates) {
  const LineSetup setup = PrepareLine(inst);
  const int n = static_cast<int>(setup.targets.size());
  const int m = static_cast<int>(setup.stations.size());

  std::vector<InnerTable> inner;
  inner.reserve(m);
  for (int k = 0; k < m; ++k) {
    inner.emplace_back(make_candidates(setup.stations[k], k, setup.targets, setup.radius),
                       setup.targets);
  }

  // outer[k][i]: stations 0..k-1 serve targets 0..i-1. block[k][i] is the
  // number of targets station k-1 serves in the optimum (0 = unused).
  std::vector<std::vector<Score>> outer(m + 1, std::vector<Score>(n + 1));
  std::vector<std::vector<int>> block(m + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) outer[0][i].cost = kInfinity;
  for (int k = 1; k <= m; ++k) {
    const double open_cost = setup.stations[k - 1].opening_cost;
    for (int i = 1; i <= n; ++i) {
      Score best = outer[k - 1][i];
      int best_j = 0;
      for (int j = 1; j <= i; ++j) {
        const Score& prev = outer[k - 1][i - j];
        const double d = inner[k - 1].Value(i - j, i - 1);
        if (std::isinf(prev.cost) || std::isinf(d)) continue;
        const Score cand{prev.cost + open_cost + d, prev.opened + 1,
                         prev.sensors + inner[k - 1].SensorCount(i - j, i - 1)};
        if (Better(cand, best)) {
          best = cand;
          best_j = j;
        }
      }
      outer[k][i] = best;
      block[k][i] = best_j;
    }
  }
  if (std::isinf(outer[m][n].cost)) throw InfeasibleError("no station can cover every target");

  std::vector<int> opened;
  std::vector<CandidatePosition> sensors;
  for (int k = m, i = n; k > 0 && i > 0; --k) {
    const int j = block[k][i];
    if (j == 0) continue;
    opened.push_back(k - 1);
    for (const auto& c : inner[k - 1].Reconstruct(i - j, i - 1)) sensors.push_back(c);
    i -= j;
  }
  return BuildSolution(inst, setup, std::move(opened), sensors);
}

}  // namespace

// ---------------------------------------------------------------------------
// Candidates

std::vector<CandidatePosition> CandidatePositionsLine(const Station& station, int station_index,
                                                      std::span<const Point> targets,
                                                      double radius) {
  std::vector<CandidatePosition> out;
  out.reserve(2 * targets.size() + 1);
  const int n = static_cast<int>(targets.size());
  for (int t = 0; t < n; ++t) {
    // Target on the left, then on the right coverage boundary.
    out.push_back(MakeCandidate(station, station_index, {targets[t].x + radius, 0.0}, radius, t, t));
    out.push_back(MakeCandidate(station, station_index, {targets[t].x - radius, 0.0}, radius, t, t));
  }
  out.push_back(MakeCandidate(station, station_index, {station.position.x, 0.0}, radius, n, -1));
  return out;
}

std::vector<CandidatePosition> CandidatePositionsGeneral(const Station& station, int station_index,
                                                         std::span<const Point> targets,
                                                         double radius) {
  auto half_width = [radius](Point c) {
    return std::sqrt(std::max(0.0, radius * radius - c.y * c.y));
  };
  std::vector<CandidatePosition> out;
  const int n = static_cast<int>(targets.size());
  for (int t = 0; t < n; ++t) {
    const double d = Distance(station.position, targets[t]);
    Point c = station.position;
    if (d > radius) c = targets[t] + (radius / d) * (station.position - targets[t]);
    out.push_back(MakeCandidate(station, station_index, c, half_width(c), t, t));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (Point c : CirclePairIntersections(targets[a], targets[b], radius)) {
        if (c.y < -kLineTol) continue;
        c.y = std::max(c.y, 0.0);
        out.push_back(MakeCandidate(station, station_index, c, half_width(c), a, b));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inner tables

InnerTable::InnerTable(std::vector<CandidatePosition> candidates, std::span<const Point> targets)
    : n_(static_cast<int>(targets.size())),
      candidates_(std::move(candidates)),
      below_(LastTargetBelow(candidates_, targets)) {
  const size_t slots = static_cast<size_t>(n_) * (n_ + 1);
  value_.assign(slots, kInfinity);
  sensors_.assign(slots, 0);
  choice_.assign(slots, -1);
  const auto covering = CoveringLists(candidates_, targets);

  for (int l = 0; l < n_; ++l) {
    value_[Slot(l, l - 1)] = 0.0;
    for (int i = l; i < n_; ++i) {
      Score best{kInfinity, 0, 0};
      int best_c = -1;
      for (int c : covering[i]) {
        if (!InInterval(candidates_[c], l, i)) continue;
        const int prev = std::max(l - 1, below_[c]);
        const double rest = value_[Slot(l, prev)];
        if (std::isinf(rest)) continue;
        const Score cand{candidates_[c].move_distance + rest, 0, sensors_[Slot(l, prev)] + 1};
        if (Better(cand, best)) {
          best = cand;
          best_c = c;
        }
      }
      value_[Slot(l, i)] = best.cost;
      sensors_[Slot(l, i)] = best.sensors;
      choice_[Slot(l, i)] = best_c;
    }
  }
}

double InnerTable::Value(int l, int i) const {
  if (i < l) return 0.0;
  return value_[Slot(l, i)];
}

int InnerTable::SensorCount(int l, int i) const { return i < l ? 0 : sensors_[Slot(l, i)]; }

std::vector<CandidatePosition> InnerTable::Reconstruct(int l, int i) const {
  std::vector<CandidatePosition> out;
  while (i >= l) {
    const int c = choice_[Slot(l, i)];
    if (c < 0) throw InfeasibleError("interval cannot be covered by this station");
    out.push_back(candidates_[c]);
    i = std::max(l - 1, below_[c]);
  }
  return out;
}

PartialInnerTable::PartialInnerTable(std::vector<CandidatePosition> candidates,
                                     std::span<const Point> targets, int max_required)
    : n_(static_cast<int>(targets.size())),
      kmax_(max_required),
      candidates_(std::move(candidates)),
      below_(LastTargetBelow(candidates_, targets)) {
  if (kmax_ < 0) throw std::invalid_argument("required coverage must be nonnegative");
  const size_t slots = static_cast<size_t>(n_) * (n_ + 1) * (kmax_ + 1);
  value_.assign(slots, kInfinity);
  sensors_.assign(slots, 0);
  choice_.assign(slots, -2);
  const auto covering = CoveringLists(candidates_, targets);

  for (int l = 0; l < n_; ++l) {
    value_[Slot(l, l - 1, 0)] = 0.0;
    for (int i = l; i < n_; ++i) {
      value_[Slot(l, i, 0)] = 0.0;
      for (int need = 1; need <= kmax_; ++need) {
        // Leave t_i uncovered.
        Score best{value_[Slot(l, i - 1, need)], 0, sensors_[Slot(l, i - 1, need)]};
        int best_c = -1;
        for (int c : covering[i]) {
          if (!InInterval(candidates_[c], l, i)) continue;
          const int prev = std::max(l - 1, below_[c]);
          const int rest_need = std::max(0, need - (i - prev));
          const double rest = value_[Slot(l, prev, rest_need)];
          if (std::isinf(rest)) continue;
          const Score cand{candidates_[c].move_distance + rest, 0,
                           sensors_[Slot(l, prev, rest_need)] + 1};
          if (Better(cand, best)) {
            best = cand;
            best_c = c;
          }
        }
        value_[Slot(l, i, need)] = best.cost;
        sensors_[Slot(l, i, need)] = best.sensors;
        choice_[Slot(l, i, need)] = best_c;
      }
    }
  }
}

double PartialInnerTable::Value(int l, int i, int required) const {
  if (required <= 0) return 0.0;
  if (i < l) return kInfinity;
  if (required > kmax_) throw std::out_of_range("required coverage above table bound");
  return value_[Slot(l, i, required)];
}

int PartialInnerTable::SensorCount(int l, int i, int required) const {
  if (required <= 0 || i < l) return 0;
  return sensors_[Slot(l, i, required)];
}

std::vector<CandidatePosition> PartialInnerTable::Reconstruct(int l, int i, int required) const {
  std::vector<CandidatePosition> out;
  while (required > 0) {
    if (i < l) throw InfeasibleError("interval cannot meet the required coverage");
    const int c = choice_[Slot(l, i, required)];
    if (c == -1) {
      --i;
      continue;
    }
    if (c < 0) throw InfeasibleError("interval cannot meet the required coverage");
    out.push_back(candidates_[c]);
    const int prev = std::max(l - 1, below_[c]);
    required = std::max(0, required - (i - prev));
    i = prev;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Solvers

Solution SolveLineExact(const Instance& inst) { return SolveBiLevel(inst, &CandidatePositionsLine); }

Solution SolveLineGeneral(const Instance& inst) {
  return SolveBiLevel(inst, &CandidatePositionsGeneral);
}

Solution SolveLinePartial(const Instance& inst, int required) {
  if (required < 0 || required > static_cast<int>(inst.targets.size())) {
    throw std::invalid_argument("required coverage must lie in [0, n]");
  }
  if (required == 0) {
    CheckInstance(inst);
    if (!IsLineInstance(inst)) {
      throw std::invalid_argument("line solvers require every target on y = 0");
    }
    return Solution{};
  }
  const LineSetup setup = PrepareLine(inst);
  const int n = static_cast<int>(setup.targets.size());
  const int m = static_cast<int>(setup.stations.size());
  const int kreq = required;

  // cover[k][i][K]: stations 0..k-1 cover at least K of targets 0..i-1.
  // Each level only needs its predecessor plus back-pointers, and station
  // tables are rebuilt for reconstruction to keep memory at one table.
  auto idx = [&](int i, int need) { return static_cast<size_t>(i) * (kreq + 1) + need; };
  std::vector<std::vector<Score>> cover(m + 1, std::vector<Score>((n + 1) * (kreq + 1)));
  std::vector<std::vector<std::pair<int, int>>> back(
      m + 1, std::vector<std::pair<int, int>>((n + 1) * (kreq + 1), {0, 0}));
  for (int i = 0; i <= n; ++i) {
    for (int need = 1; need <= kreq; ++need) cover[0][idx(i, need)].cost = kInfinity;
  }

  auto table_for = [&](int k) {
    return PartialInnerTable(CandidatePositionsLine(setup.stations[k], k, setup.targets,
                                                    setup.radius),
                             setup.targets, kreq);
  };

  for (int k = 1; k <= m; ++k) {
    const PartialInnerTable table = table_for(k - 1);
    const double open_cost = setup.stations[k - 1].opening_cost;
    for (int i = 0; i <= n; ++i) {
      for (int need = 1; need <= kreq; ++need) {
        Score best = cover[k - 1][idx(i, need)];
        std::pair<int, int> best_move{0, 0};
        for (int j = 1; j <= i; ++j) {
          for (int part = 1; part <= std::min(j, need); ++part) {
            const Score& prev = cover[k - 1][idx(i - j, need - part)];
            const double d = table.Value(i - j, i - 1, part);
            if (std::isinf(prev.cost) || std::isinf(d)) continue;
            const Score cand{prev.cost + open_cost + d, prev.opened + 1,
                             prev.sensors + table.SensorCount(i - j, i - 1, part)};
            if (Better(cand, best)) {
              best = cand;
              best_move = {j, part};
            }
          }
        }
        cover[k][idx(i, need)] = best;
        back[k][idx(i, need)] = best_move;
      }
    }
  }
  if (std::isinf(cover[m][idx(n, kreq)].cost)) {
    throw InfeasibleError("required coverage is unreachable");
  }

  std::vector<int> opened;
  std::vector<CandidatePosition> sensors;
  for (int k = m, i = n, need = kreq; k > 0 && need > 0; --k) {
    const auto [j, part] = back[k][idx(i, need)];
    if (j == 0) continue;
    opened.push_back(k - 1);
    for (const auto& c : table_for(k - 1).Reconstruct(i - j, i - 1, part)) sensors.push_back(c);
    i -= j;
    need -= part;
  }
  return BuildSolution(inst, setup, std::move(opened), sensors);
}

}  // namespace movecover
