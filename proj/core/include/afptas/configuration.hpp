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

#ifndef AFPTAS_CONFIGURATION_HPP
#define AFPTAS_CONFIGURATION_HPP

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "afptas/rounding.hpp"
#include "afptas/windows.hpp"

namespace afptas {

// A multiset of item types packed into one bin. counts[v] <= n(v), the
// rounded total size is at most 1 and (BPCC) the item count at most k.
struct Configuration {
  std::vector<int> counts;  // indexed by type index in RoundedInstance
  Rational total_size;      // s'(C), cached
  int total_items = 0;      // cached

  bool empty() const { return total_items == 0; }
};

// A configuration paired with a window from the grid; valid when the window
// is dominated by the configuration's main window.
struct GeneralizedConfiguration {
  int config_id = -1;
  Window window;
};

// Deduplicating store for configurations; ids are stable.
class ConfigurationPool {
 public:
  explicit ConfigurationPool(const RoundedInstance* rounded) : rounded_(rounded) {}

  // Builds the cached fields, verifies feasibility, and interns.
  int intern(const std::vector<int>& counts);
  int intern_empty();

  const Configuration& get(int id) const { return configs_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(configs_.size()); }

 private:
  const RoundedInstance* rounded_;
  std::vector<Configuration> configs_;
  std::unordered_map<std::size_t, std::vector<int>> by_hash_;
};

}  // namespace afptas

#endif  // AFPTAS_CONFIGURATION_HPP
