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

#ifndef AFPTAS_PRICING_HPP
#define AFPTAS_PRICING_HPP

#include <memory>
#include <optional>
#include <vector>

#include "afptas/rational.hpp"

namespace afptas {

// One priced item class: a dual weight as profit, an exact size, and how many
// copies may be taken.
struct PricingItem {
  int type_index = 0;   // caller's tag, echoed back in results
  double profit = 0.0;  // dual weight, need not be rational
  Rational size;        // in [0,1]
  int multiplicity = 1;
};

struct PricingProblem {
  std::vector<PricingItem> items;
  Rational capacity;            // <= 1
  bool capacity_strict = false; // total size < capacity instead of <=
  std::optional<int> cardinality_bound;
  Rational eps;                 // FPTAS accuracy, value >= (1-eps) * optimum
};

struct PricingResult {
  std::vector<int> counts;  // aligned with the problem's item vector
  double value = 0.0;       // true profit of the returned multiset
};

// Profit-scaling dynamic program over (scaled profit, cardinality) states.
// Multiplicities expand into binary groups; sizes are scaled to a common
// integer denominator so the (possibly strict) capacity is decided exactly.
// One table answers every cardinality bound up to max_cardinality: entry c
// of the sweep equals kcc_fptas with cardinality_bound = c.
//
// Ties break toward smaller total size, then earlier items; identical inputs
// give identical outputs.
class KccSweep {
 public:
  KccSweep(const std::vector<PricingItem>& items, const Rational& capacity,
           bool capacity_strict, int max_cardinality, const Rational& eps);
  ~KccSweep();
  KccSweep(KccSweep&&) noexcept;
  KccSweep& operator=(KccSweep&&) noexcept;

  int max_cardinality() const;
  // Best true profit over multisets with at most c items (non-decreasing in c).
  double value(int c) const;
  // Reconstructs the multiset achieving value(c).
  PricingResult result(int c) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Knapsack with a maximum cardinality constraint; requires cardinality_bound.
// value >= (1 - eps) * optimum; the returned multiset satisfies the exact
// capacity (strict if flagged), the cardinality bound and all multiplicities.
PricingResult kcc_fptas(const PricingProblem& problem);

// Standard knapsack FPTAS (cardinality_bound absent): same contract without
// the cardinality constraint.
PricingResult knapsack_fptas(const PricingProblem& problem);

// Spec-shaped convenience wrapper over KccSweep.
std::vector<PricingResult> kcc_sweep(const std::vector<PricingItem>& items,
                                     const Rational& capacity, bool capacity_strict,
                                     int max_cardinality, const Rational& eps);

}  // namespace afptas

#endif  // AFPTAS_PRICING_HPP
