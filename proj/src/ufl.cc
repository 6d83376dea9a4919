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

#include "movecover/ufl.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

namespace movecover {

namespace {

void CheckCost(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(std::string(what) + " must be finite and nonnegative");
  }
}

}  // namespace

UflInstance::UflInstance(std::vector<double> opening_costs,
                         const std::vector<std::vector<double>>& connection)
    : opening_(std::move(opening_costs)) {
  if (connection.size() != opening_.size()) {
    throw std::invalid_argument("connection matrix needs one row per facility");
  }
  clients_ = connection.empty() ? 0 : static_cast<int>(connection.front().size());
  conn_.reserve(opening_.size() * clients_);
  for (const auto& row : connection) {
    if (static_cast<int>(row.size()) != clients_) {
      throw std::invalid_argument("connection matrix rows differ in length");
    }
    for (double v : row) {
      CheckCost(v, "connection cost");
      conn_.push_back(v);
    }
  }
  for (double f : opening_) CheckCost(f, "opening cost");
}

UflInstance::UflInstance(std::vector<double> opening_costs, int num_clients)
    : opening_(std::move(opening_costs)), clients_(num_clients) {
  if (num_clients < 0) throw std::invalid_argument("negative client count");
  for (double f : opening_) CheckCost(f, "opening cost");
  conn_.assign(opening_.size() * static_cast<size_t>(clients_), 0.0);
}

UflSolution AssignClients(const UflInstance& inst, std::vector<int> opened) {
  std::sort(opened.begin(), opened.end());
  opened.erase(std::unique(opened.begin(), opened.end()), opened.end());
  UflSolution sol;
  sol.opened = std::move(opened);
  for (int f : sol.opened) sol.total += inst.opening_cost(f);
  sol.assignment.assign(inst.num_clients(), -1);
  for (int c = 0; c < inst.num_clients(); ++c) {
    double best = std::numeric_limits<double>::infinity();
    for (int f : sol.opened) {
      if (inst.connection(f, c) < best) {
        best = inst.connection(f, c);
        sol.assignment[c] = f;
      }
    }
    if (sol.assignment[c] < 0) throw std::invalid_argument("client left without a facility");
    sol.total += best;
  }
  return sol;
}

UflSolution UflExact(const UflInstance& inst, int max_facilities) {
  const int m = inst.num_facilities();
  const int n = inst.num_clients();
  if (m > max_facilities) {
    throw std::invalid_argument("exact UFL limited to " + std::to_string(max_facilities) +
                                " facilities, got " + std::to_string(m));
  }
  if (n == 0) return UflSolution{};
  if (m == 0) throw std::invalid_argument("UFL instance has clients but no facilities");

  // Depth-first over include/exclude decisions in index order, carrying each
  // client's cheapest open connection. Visiting "include" first enumerates
  // subsets in lexicographic order, so strict improvement keeps the
  // lexicographically smallest optimum among equal sizes.
  double best_total = std::numeric_limits<double>::infinity();
  std::vector<int> best_set;
  std::vector<int> current;
  std::vector<std::vector<double>> reach(m + 1, std::vector<double>(n));
  std::fill(reach[0].begin(), reach[0].end(), std::numeric_limits<double>::infinity());

  auto consider = [&](double opening) {
    double total = opening;
    for (double v : reach[current.size()]) total += v;
    const double tol = 1e-12 * std::max(1.0, std::abs(best_total));
    const bool better =
        std::isinf(best_total) || total < best_total - tol ||
        (total <= best_total + tol &&
         (current.size() < best_set.size() ||
          (current.size() == best_set.size() && current < best_set)));
    if (better) {
      best_total = total;
      best_set = current;
    }
  };

  auto recurse = [&](auto&& self, int f, double opening) -> void {
    if (f == m) {
      if (!current.empty()) consider(opening);
      return;
    }
    const size_t depth = current.size();
    for (int c = 0; c < n; ++c) reach[depth + 1][c] = std::min(reach[depth][c], inst.connection(f, c));
    current.push_back(f);
    self(self, f + 1, opening + inst.opening_cost(f));
    current.pop_back();
    self(self, f + 1, opening);
  };
  recurse(recurse, 0, 0.0);
  return AssignClients(inst, best_set);
}

UflSolution UflGreedy(const UflInstance& inst) {
  const int m = inst.num_facilities();
  const int n = inst.num_clients();
  if (n == 0) return UflSolution{};
  if (m == 0) throw std::invalid_argument("UFL instance has clients but no facilities");

  // Per facility, clients by ascending connection cost (ties by index). Served
  // clients are dropped lazily when a facility is re-evaluated.
  std::vector<std::vector<int>> order(m);
  for (int f = 0; f < m; ++f) {
    order[f].resize(n);
    std::iota(order[f].begin(), order[f].end(), 0);
    std::stable_sort(order[f].begin(), order[f].end(), [&](int a, int b) {
      return inst.connection(f, a) < inst.connection(f, b);
    });
  }
  std::vector<double> remaining_open = inst.opening_costs();
  std::vector<char> served(n, 0);
  std::vector<char> is_open(m, 0);
  int unserved = n;

  // Best star of facility f: the prefix of its sorted unserved clients that
  // minimizes (opening + sum of connections) / size. The average stops
  // decreasing at the first client whose cost reaches it, so the scan ends
  // there. Equal ratios keep the longer prefix.
  struct Star {
    double ratio;
    int size;
  };
  auto best_star = [&](int f) {
    auto& list = order[f];
    list.erase(std::remove_if(list.begin(), list.end(), [&](int c) { return served[c] != 0; }),
               list.end());
    Star best{std::numeric_limits<double>::infinity(), 0};
    double sum = remaining_open[f];
    for (size_t p = 0; p < list.size(); ++p) {
      sum += inst.connection(f, list[p]);
      const double ratio = sum / static_cast<double>(p + 1);
      if (ratio <= best.ratio) {
        best = {ratio, static_cast<int>(p + 1)};
      } else {
        break;
      }
    }
    return best;
  };

  // Lazy evaluation: a facility's best ratio only grows as clients get
  // served, until it is opened (which is when it gets re-keyed). Stale keys
  // are therefore lower bounds.
  using Entry = std::tuple<double, int>;  // (ratio, facility)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (int f = 0; f < m; ++f) heap.emplace(best_star(f).ratio, f);

  while (unserved > 0) {
    auto [key, f] = heap.top();
    heap.pop();
    const Star star = best_star(f);
    if (star.size == 0) continue;
    if (!heap.empty() && Entry{star.ratio, f} > heap.top()) {
      heap.emplace(star.ratio, f);
      continue;
    }
    for (int p = 0; p < star.size; ++p) {
      served[order[f][p]] = 1;
      --unserved;
    }
    remaining_open[f] = 0.0;
    is_open[f] = 1;
    heap.emplace(best_star(f).ratio, f);
  }

  std::vector<int> opened;
  for (int f = 0; f < m; ++f) {
    if (is_open[f]) opened.push_back(f);
  }
  UflSolution sol = AssignClients(inst, opened);
  std::vector<int> used;
  for (int f : sol.opened) {
    if (std::find(sol.assignment.begin(), sol.assignment.end(), f) != sol.assignment.end()) {
      used.push_back(f);
    }
  }
  if (used.size() != sol.opened.size()) sol = AssignClients(inst, used);
  return sol;
}

}  // namespace movecover
