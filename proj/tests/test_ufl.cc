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

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "movecover/geometry.h"
#include "movecover/ufl.h"

using namespace movecover;

namespace {

// Facilities and clients at random planar points, Euclidean connection costs.
UflInstance RandomMetric(std::mt19937_64& rng, int facilities, int clients) {
  std::uniform_real_distribution<double> c(0, 10);
  std::uniform_real_distribution<double> f(0, 8);
  std::vector<Point> fp(facilities), cp(clients);
  for (Point& p : fp) p = {c(rng), c(rng)};
  for (Point& p : cp) p = {c(rng), c(rng)};
  std::vector<double> open(facilities);
  for (double& o : open) o = f(rng);
  std::vector<std::vector<double>> conn(facilities, std::vector<double>(clients));
  for (int i = 0; i < facilities; ++i) {
    for (int j = 0; j < clients; ++j) conn[i][j] = Distance(fp[i], cp[j]);
  }
  return UflInstance(open, conn);
}

// Independent subset enumeration.
double BruteForce(const UflInstance& inst) {
  const int m = inst.num_facilities();
  double best = 1e300;
  for (int mask = 1; mask < (1 << m); ++mask) {
    double total = 0;
    for (int f = 0; f < m; ++f) {
      if (mask >> f & 1) total += inst.opening_cost(f);
    }
    for (int c = 0; c < inst.num_clients(); ++c) {
      double cheapest = 1e300;
      for (int f = 0; f < m; ++f) {
        if (mask >> f & 1) cheapest = std::min(cheapest, inst.connection(f, c));
      }
      total += cheapest;
    }
    best = std::min(best, total);
  }
  return best;
}

void CheckRelaxed(const UflInstance& inst, const UflSolution& sol) {
  double total = 0;
  for (int f : sol.opened) total += inst.opening_cost(f);
  REQUIRE(static_cast<int>(sol.assignment.size()) == inst.num_clients());
  for (int c = 0; c < inst.num_clients(); ++c) {
    const int a = sol.assignment[c];
    CHECK(std::find(sol.opened.begin(), sol.opened.end(), a) != sol.opened.end());
    for (int f : sol.opened) CHECK(inst.connection(a, c) <= inst.connection(f, c) + 1e-12);
    total += inst.connection(a, c);
  }
  CHECK(sol.total == doctest::Approx(total).epsilon(1e-12));
}

}  // namespace

TEST_CASE("single facility") {
  const UflInstance inst({1.0}, {{1.0, 1.0}});
  const UflSolution exact = UflExact(inst);
  CHECK(exact.total == doctest::Approx(3.0));
  CHECK(exact.opened == std::vector<int>{0});
  const UflSolution greedy = UflGreedy(inst);
  CHECK(greedy.total == doctest::Approx(3.0));
  CHECK(greedy.opened == exact.opened);
  CHECK(greedy.assignment == exact.assignment);
}

TEST_CASE("two facility example") {
  const UflInstance inst({10.0, 1.0}, {{1.0, 1.0}, {2.0, 2.0}});
  const UflSolution exact = UflExact(inst);
  CHECK(exact.total == doctest::Approx(5.0));
  CHECK(exact.opened == std::vector<int>{1});
  const UflSolution greedy = UflGreedy(inst);
  CHECK(greedy.total == doctest::Approx(5.0));
  CHECK(greedy.opened == std::vector<int>{1});
  CHECK(greedy.assignment == std::vector<int>{1, 1});
}

TEST_CASE("free facilities") {
  const UflInstance inst({0.0, 0.0, 0.0}, {{3, 1, 4}, {1, 5, 9}, {2, 6, 5}});
  CHECK(UflExact(inst).total == doctest::Approx(1 + 1 + 4));
}

TEST_CASE("exact tie-break prefers fewer facilities then lexicographic") {
  // Opening {0} or {1} costs 2; {0,1} also costs 2 but uses more facilities.
  const UflInstance inst({1.0, 1.0}, {{0.0, 1.0}, {1.0, 0.0}});
  const UflSolution sol = UflExact(inst);
  CHECK(sol.total == doctest::Approx(2.0));
  CHECK(sol.opened == std::vector<int>{0});
}

TEST_CASE("exact guard") {
  const UflInstance inst(std::vector<double>(21, 1.0), 3);
  CHECK_THROWS(UflExact(inst));
  CHECK_NOTHROW(UflExact(UflInstance(std::vector<double>(3, 1.0), 2), 3));
}

TEST_CASE("invalid costs are rejected") {
  CHECK_THROWS(UflInstance({-1.0}, {{1.0}}));
  CHECK_THROWS(UflInstance({1.0}, {{-1.0}}));
  CHECK_THROWS(UflInstance({1.0, 2.0}, {{1.0}}));
}

TEST_CASE("no clients") {
  const UflInstance inst({1.0, 2.0}, 0);
  CHECK(UflExact(inst).total == 0.0);
  CHECK(UflGreedy(inst).total == 0.0);
}

TEST_CASE("exact matches brute force and greedy stays within factor") {
  std::mt19937_64 rng(31);
  double worst = 1.0;
  for (int it = 0; it < 300; ++it) {
    const int m = 1 + it % 10;
    const int n = 1 + static_cast<int>(rng() % 20);
    const UflInstance inst = RandomMetric(rng, m, n);
    const UflSolution exact = UflExact(inst);
    const UflSolution greedy = UflGreedy(inst);
    CHECK(exact.total == doctest::Approx(BruteForce(inst)).epsilon(1e-12));
    CHECK(exact.total <= greedy.total + 1e-9);
    CHECK(greedy.total <= kGreedyUflFactor * exact.total + 1e-9);
    CheckRelaxed(inst, exact);
    CheckRelaxed(inst, greedy);
    worst = std::max(worst, greedy.total / std::max(exact.total, 1e-300));
  }
  MESSAGE("worst greedy/exact ratio: " << worst);
}

TEST_CASE("adding a facility never hurts the exact optimum") {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 100; ++it) {
    const int m = 1 + it % 8;
    const UflInstance big = RandomMetric(rng, m + 1, 1 + it % 12);
    std::vector<double> open(big.opening_costs().begin(), big.opening_costs().end() - 1);
    UflInstance small(open, big.num_clients());
    for (int f = 0; f < m; ++f) {
      for (int c = 0; c < big.num_clients(); ++c) small.set_connection(f, c, big.connection(f, c));
    }
    CHECK(UflExact(big).total <= UflExact(small).total + 1e-12);
  }
}

TEST_CASE("greedy is deterministic") {
  std::mt19937_64 rng(33);
  const UflInstance inst = RandomMetric(rng, 30, 200);
  const UflSolution a = UflGreedy(inst);
  const UflSolution b = UflGreedy(inst);
  CHECK(a.opened == b.opened);
  CHECK(a.assignment == b.assignment);
  CHECK(a.total == b.total);
}
