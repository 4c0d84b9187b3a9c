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

#include "afptas/configuration.hpp"

#include "afptas/errors.hpp"

namespace afptas {

namespace {

std::size_t hash_counts(const std::vector<int>& counts) {
  std::size_t h = 1469598103934665603ull;
  for (int c : counts) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

int ConfigurationPool::intern(const std::vector<int>& counts) {
  if (counts.size() != rounded_->item_types.size()) {
    throw InternalInvariantViolation("configuration count vector has wrong arity");
  }
  const std::size_t h = hash_counts(counts);
  auto it = by_hash_.find(h);
  if (it != by_hash_.end()) {
    for (int id : it->second) {
      if (configs_[static_cast<std::size_t>(id)].counts == counts) return id;
    }
  }

  Configuration config;
  config.counts = counts;
  config.total_size = 0;
  config.total_items = 0;
  for (std::size_t v = 0; v < counts.size(); ++v) {
    const int c = counts[v];
    if (c < 0 || c > rounded_->item_types[v].multiplicity) {
      throw InternalInvariantViolation("configuration exceeds type multiplicity");
    }
    if (c > 0) {
      config.total_size += Rational(c) * rounded_->item_types[v].size;
      config.total_items += c;
    }
  }
  if (config.total_size > 1) {
    throw InternalInvariantViolation("configuration exceeds bin size");
  }
  if (rounded_->problem == Problem::kBpcc && config.total_items > rounded_->k) {
    throw InternalInvariantViolation("configuration exceeds cardinality bound");
  }

  const int id = static_cast<int>(configs_.size());
  configs_.push_back(std::move(config));
  by_hash_[h].push_back(id);
  return id;
}

int ConfigurationPool::intern_empty() {
  return intern(std::vector<int>(rounded_->item_types.size(), 0));
}

}  // namespace afptas
