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

#ifndef AFPTAS_PACKING_HPP
#define AFPTAS_PACKING_HPP

#include <string>
#include <vector>

#include "afptas/instance.hpp"

namespace afptas {

struct Bin {
  std::vector<int> large_ids;
  std::vector<int> small_ids;

  std::vector<int> all_ids() const;
  int item_count() const {
    return static_cast<int>(large_ids.size() + small_ids.size());
  }
};

// A feasible integral solution: bins of item ids plus (BPR) the rejected set.
// cost = number of bins + sum of the rejected items' original penalties.
struct Packing {
  std::vector<Bin> bins;
  std::vector<int> rejected;
  Rational cost;
};

// Exact cost recomputation from the instance (original penalties).
Rational packing_cost(const Packing& packing, const Instance& instance);

// JSON form: {"bins":[[ids]...], "rejected":[ids], "cost":"decimal"}.
std::string packing_to_json(const Packing& packing);
Packing packing_from_json(const std::string& json_text);
Packing load_packing(const std::string& path);
void save_packing(const Packing& packing, const std::string& path);

}  // namespace afptas

#endif  // AFPTAS_PACKING_HPP
