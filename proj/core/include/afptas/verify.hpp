// Copyright 2026 The Afptas Authors
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

#ifndef AFPTAS_VERIFY_HPP
#define AFPTAS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "afptas/packing.hpp"
#include "afptas/pricing.hpp"

namespace afptas {

// Test oracles and baselines. Everything here is exact and independent of the
// approximation pipeline; nothing from lp/ or assembly/ is used.

struct Violation {
  std::string message;
};

// Exact-rational feasibility and cost verification: per-bin size <= 1,
// per-bin cardinality <= k (BPCC), exact item coverage (each item packed
// once, or rejected for BPR), penalties present where required, and the
// stored cost matching bins + rejected penalties. Returns all violations.
std::vector<Violation> check(const Packing& packing, const Instance& instance);

struct ExactResult {
  Rational opt_cost;
  Packing witness;
  std::int64_t nodes_explored = 0;
};

// Branch-and-bound exact solvers for desk-scale instances.
// exact_bpcc: n <= 12; exact_bpr: n <= 10. Throw TooLarge beyond the caps.
ExactResult exact_bpcc(const Instance& instance);
ExactResult exact_bpr(const Instance& instance);

// First-Fit-Decreasing respecting the cardinality bound (BPCC), or the
// greedy that rejects an item when its penalty beats opening capacity (BPR).
Packing ffd_baseline(const Instance& instance);

// Exact knapsack optimum by enumeration; <= 20 expanded copies.
double brute_knapsack(const PricingProblem& problem);

}  // namespace afptas

#endif  // AFPTAS_VERIFY_HPP
