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

// Metric uncapacitated facility location.

#ifndef MOVECOVER_UFL_H_
#define MOVECOVER_UFL_H_

#include <stdexcept>
#include <vector>

namespace movecover {

class UflInstance {
 public:
  UflInstance() = default;
  // connection is facility-major: connection[f][c].
  UflInstance(std::vector<double> opening_costs, const std::vector<std::vector<double>>& connection);
  UflInstance(std::vector<double> opening_costs, int num_clients);

  int num_facilities() const { return static_cast<int>(opening_.size()); }
  int num_clients() const { return clients_; }

  double opening_cost(int f) const { return opening_[f]; }
  double connection(int f, int c) const { return conn_[static_cast<size_t>(f) * clients_ + c]; }
  void set_connection(int f, int c, double cost) {
    conn_[static_cast<size_t>(f) * clients_ + c] = cost;
  }

  const std::vector<double>& opening_costs() const { return opening_; }

 private:
  std::vector<double> opening_;
  int clients_ = 0;
  std::vector<double> conn_;
};

struct UflSolution {
  std::vector<int> opened;      // ascending
  std::vector<int> assignment;  // client -> facility
  double total = 0.0;
};

// Assigns every client to its cheapest opened facility (ties to the smaller
// index) and returns the resulting solution.
UflSolution AssignClients(const UflInstance& inst, std::vector<int> opened);

inline constexpr int kDefaultUflExactLimit = 20;

// Global optimum by enumerating every nonempty facility subset. Ties prefer
// fewer facilities, then the lexicographically smallest index set. Throws
// std::invalid_argument above `max_facilities`.
UflSolution UflExact(const UflInstance& inst, int max_facilities = kDefaultUflExactLimit);

// Greedy star algorithm (1.861-approximate on metric instances): repeatedly
// open the facility/client-subset star with the least average cost, zeroing
// the facility's opening cost once opened. Clients are finally reassigned to
// their cheapest opened facility and facilities left without clients are
// closed.
UflSolution UflGreedy(const UflInstance& inst);

inline constexpr double kGreedyUflFactor = 1.861;

}  // namespace movecover

#endif  // MOVECOVER_UFL_H_
