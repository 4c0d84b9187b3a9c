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

#ifndef AFPTAS_ROUNDING_HPP
#define AFPTAS_ROUNDING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "afptas/instance.hpp"

namespace afptas {

// A rounded item class: distinct (size, penalty) with its member item ids.
struct ItemType {
  Rational size;
  std::optional<Rational> penalty;  // rounded penalty, BPR only
  int multiplicity = 0;
  std::vector<int> member_ids;      // ids of the original items of this type
};

// The solver's three pipelines differ in what gets typed:
//   BPCC small-k: every item becomes a type (no small set).
//   BPCC large-k: items with size >= eps become types; the rest are small.
//   BPR: items with size >= eps and penalty >= eps become types (penalties
//        rounded down to the eps + i*eps^2 grid first); the rest are small.
struct RoundedInstance {
  Problem problem = Problem::kBpcc;
  int k = 0;                     // effective cardinality bound (min(k, n) for BPCC)
  Rational epsilon;
  std::vector<ItemType> item_types;   // the set H with multiplicities n(v)
  std::vector<Item> small_items;      // S, untouched sizes/penalties
  std::vector<Item> set_aside;        // L1, packed one per bin
  std::vector<std::pair<int, int>> origin_map;  // rounded item id -> original id
  int num_large = 0;             // |L| before grouping

  int h_size() const { return static_cast<int>(item_types.size()); }
};

// Large/small split. BPCC: size >= eps. BPR: size >= eps and penalty >= eps.
std::pair<std::vector<Item>, std::vector<Item>> split_large_small(
    const std::vector<Item>& items, const Rational& eps, Problem problem);

// Rounds penalties of large BPR items down onto the grid eps + i*eps^2,
// i in 0..(1/eps^2 - 1/eps). Items must satisfy size >= eps and penalty >= eps.
std::vector<Item> round_penalties(std::vector<Item> large_items, const Rational& eps);

struct GroupingResult {
  // classes[0] is L1 (set aside); classes[p], p >= 1, are the rounded classes.
  std::vector<std::vector<Item>> classes;   // original items, original sizes
  std::vector<Item> rounded;                // classes >= 1 with rounded-up sizes
  std::vector<Item> set_aside;              // == classes[0]
};

// Linear grouping into num_classes classes of non-increasing cardinality
// |L1| = ceil(|L|/num_classes) down to floor(|L|/num_classes); classes past
// the first are rounded up to their maximum size. If fewer items than
// classes, every item is its own class and nothing is rounded or set aside.
// Ties between equal sizes break by original item id.
GroupingResult linear_grouping(std::vector<Item> items, int num_classes);

// Full rounding drivers (validated instance in, typed instance out).
RoundedInstance round_bpcc_small_k(const Instance& instance);
RoundedInstance round_bpcc_large_k(const Instance& instance);
RoundedInstance round_bpr(const Instance& instance);

}  // namespace afptas

#endif  // AFPTAS_ROUNDING_HPP
