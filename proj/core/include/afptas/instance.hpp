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

#ifndef AFPTAS_INSTANCE_HPP
#define AFPTAS_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "afptas/rational.hpp"

namespace afptas {

enum class Problem { kBpcc, kBpr };

std::string problem_name(Problem problem);

struct Item {
  int id = 0;                        // index into the instance file order
  Rational size;                     // in [0,1]; BPR requires > 0 after extraction
  std::optional<Rational> penalty;   // rejection penalty, BPR only

  bool has_penalty() const { return penalty.has_value(); }
};

// One bin-packing instance plus the accuracy parameter. After
// validate_and_normalize(): epsilon is 1/m for integral m in the valid range
// for the problem, BPR penalties are clamped to (0,1], and BPR zero-size items
// are pulled out into `prepacked_zero_ids` (they ride in one pre-built bin).
struct Instance {
  Problem problem = Problem::kBpcc;
  std::vector<Item> items;
  int k = 0;              // cardinality bound, BPCC only
  Rational epsilon;       // 1/epsilon integral once validated
  std::vector<int> prepacked_zero_ids;

  int n() const { return static_cast<int>(items.size()); }
  long inv_eps() const;   // requires validated epsilon
  const Item& item_by_id(int id) const;
};

// Epsilon snapping: the largest 1/m (m integer) that is <= eps, clamped into
// the valid range for the problem (BPCC: eps <= 1/2, BPR: eps <= 1/3).
// Returns the snapped value and whether snapping changed the input.
struct EpsilonChoice {
  Rational value;
  bool snapped = false;
};
EpsilonChoice snap_epsilon(const Rational& requested, Problem problem);

// Validates sizes/penalties/k, clamps BPR penalties above 1 down to 1,
// extracts BPR zero-size items, and snaps epsilon.
// Throws InvalidItem / InvalidCardinality / InvalidEpsilon.
Instance validate_and_normalize(Instance raw);

// Instance file format:
//   {"problem":"bpcc"|"bpr", "k":int?, "items":[{"size":"0.375","penalty":"0.2"?},...]}
// Sizes and penalties must be decimal strings; they are parsed exactly.
Instance instance_from_json(const std::string& json_text);
std::string instance_to_json(const Instance& instance);
Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace afptas

#endif  // AFPTAS_INSTANCE_HPP
