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

#include "afptas/rounding.hpp"

#include <algorithm>
#include <map>

#include "afptas/errors.hpp"

namespace afptas {

namespace {

bool is_large(const Item& item, const Rational& eps, Problem problem) {
  if (problem == Problem::kBpcc) return item.size >= eps;
  return item.size >= eps && item.has_penalty() && *item.penalty >= eps;
}

void sort_desc_by_size(std::vector<Item>& items) {
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.id < b.id;
  });
}

long classes_per_group(const Rational& eps) {
  const long inv = (1 / eps).get_num().get_si();
  return inv * inv * inv;
}

// Merges rounded items into distinct (size, penalty) types, descending size.
std::vector<ItemType> build_types(const std::vector<Item>& rounded) {
  std::map<std::pair<Rational, Rational>, ItemType,
           std::greater<std::pair<Rational, Rational>>>
      by_key;
  for (const auto& item : rounded) {
    Rational pen = item.has_penalty() ? *item.penalty : Rational(0);
    auto key = std::make_pair(item.size, pen);
    auto it = by_key.find(key);
    if (it == by_key.end()) {
      ItemType type;
      type.size = item.size;
      if (item.has_penalty()) type.penalty = *item.penalty;
      type.multiplicity = 1;
      type.member_ids.push_back(item.id);
      by_key.emplace(key, std::move(type));
    } else {
      it->second.multiplicity += 1;
      it->second.member_ids.push_back(item.id);
    }
  }
  std::vector<ItemType> types;
  types.reserve(by_key.size());
  for (auto& [key, type] : by_key) {
    std::sort(type.member_ids.begin(), type.member_ids.end());
    types.push_back(std::move(type));
  }
  return types;
}

}  // namespace

std::pair<std::vector<Item>, std::vector<Item>> split_large_small(
    const std::vector<Item>& items, const Rational& eps, Problem problem) {
  std::vector<Item> large, small;
  for (const auto& item : items) {
    (is_large(item, eps, problem) ? large : small).push_back(item);
  }
  return {std::move(large), std::move(small)};
}

std::vector<Item> round_penalties(std::vector<Item> large_items, const Rational& eps) {
  const Rational eps_sq = eps * eps;
  for (auto& item : large_items) {
    if (!item.has_penalty() || *item.penalty < eps || item.size < eps) {
      throw InternalInvariantViolation("round_penalties applied to a non-large item");
    }
    // r in [eps + i*eps^2, eps + (i+1)*eps^2) maps to eps + i*eps^2.
    const long i = floor_to_long((*item.penalty - eps) / eps_sq);
    item.penalty = eps + Rational(i) * eps_sq;
  }
  return large_items;
}

GroupingResult linear_grouping(std::vector<Item> items, int num_classes) {
  sort_desc_by_size(items);
  GroupingResult result;
  const long n = static_cast<long>(items.size());

  if (n < num_classes) {
    // Every item its own class, nothing rounded, L1 empty.
    result.classes.emplace_back();
    for (const auto& item : items) {
      result.classes.push_back({item});
      result.rounded.push_back(item);
    }
    return result;
  }

  const long q = n / num_classes;
  const long r = n % num_classes;
  std::size_t pos = 0;
  for (int p = 0; p < num_classes; ++p) {
    const long count = q + (p < r ? 1 : 0);
    std::vector<Item> cls(items.begin() + pos, items.begin() + pos + count);
    pos += count;
    if (p == 0) {
      result.set_aside = cls;
    } else {
      // Round up to the class maximum (the first item, sizes are sorted).
      const Rational max_size = cls.front().size;
      for (auto item : cls) {
        item.size = max_size;
        result.rounded.push_back(item);
      }
    }
    result.classes.push_back(std::move(cls));
  }
  return result;
}

RoundedInstance round_bpcc_small_k(const Instance& instance) {
  RoundedInstance out;
  out.problem = Problem::kBpcc;
  out.k = std::min(instance.k, instance.n());
  out.epsilon = instance.epsilon;
  out.num_large = instance.n();

  GroupingResult grouping = linear_grouping(instance.items,
                                            classes_per_group(instance.epsilon));
  out.item_types = build_types(grouping.rounded);
  out.set_aside = grouping.set_aside;
  for (const auto& item : grouping.rounded) out.origin_map.emplace_back(item.id, item.id);
  return out;
}

RoundedInstance round_bpcc_large_k(const Instance& instance) {
  RoundedInstance out;
  out.problem = Problem::kBpcc;
  out.k = std::min(instance.k, instance.n());
  out.epsilon = instance.epsilon;

  auto [large, small] = split_large_small(instance.items, instance.epsilon,
                                          Problem::kBpcc);
  out.num_large = static_cast<int>(large.size());
  GroupingResult grouping = linear_grouping(std::move(large),
                                            classes_per_group(instance.epsilon));
  out.item_types = build_types(grouping.rounded);
  out.set_aside = grouping.set_aside;
  out.small_items = std::move(small);
  sort_desc_by_size(out.small_items);
  for (const auto& item : grouping.rounded) out.origin_map.emplace_back(item.id, item.id);
  return out;
}

RoundedInstance round_bpr(const Instance& instance) {
  RoundedInstance out;
  out.problem = Problem::kBpr;
  out.k = 0;
  out.epsilon = instance.epsilon;

  // Zero-size items ride in the pre-built bin and never reach the scheme.
  std::vector<Item> live;
  for (const auto& item : instance.items) {
    if (item.size > 0) live.push_back(item);
  }
  auto [large, small] = split_large_small(live, instance.epsilon, Problem::kBpr);
  out.num_large = static_cast<int>(large.size());
  large = round_penalties(std::move(large), instance.epsilon);

  // Linear grouping runs separately inside every rounded-penalty class.
  std::map<Rational, std::vector<Item>> by_penalty;
  for (const auto& item : large) by_penalty[*item.penalty].push_back(item);

  std::vector<Item> rounded;
  for (auto& [penalty, members] : by_penalty) {
    GroupingResult grouping = linear_grouping(std::move(members),
                                              classes_per_group(instance.epsilon));
    for (const auto& item : grouping.rounded) rounded.push_back(item);
    for (const auto& item : grouping.set_aside) out.set_aside.push_back(item);
  }
  std::sort(out.set_aside.begin(), out.set_aside.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });

  out.item_types = build_types(rounded);
  out.small_items = std::move(small);
  sort_desc_by_size(out.small_items);
  for (const auto& item : rounded) out.origin_map.emplace_back(item.id, item.id);
  std::sort(out.origin_map.begin(), out.origin_map.end());
  return out;
}

}  // namespace afptas
