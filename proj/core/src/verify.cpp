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

#include "afptas/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "afptas/errors.hpp"

namespace afptas {

std::vector<Violation> check(const Packing& packing, const Instance& instance) {
  std::vector<Violation> violations;
  auto report = [&violations](const std::string& msg) { violations.push_back({msg}); };

  const int n = instance.n();
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  auto touch = [&](int id, const char* where) {
    if (id < 0 || id >= n) {
      report(std::string(where) + ": item id " + std::to_string(id) + " out of range");
      return false;
    }
    seen[static_cast<std::size_t>(id)] += 1;
    return true;
  };

  for (std::size_t b = 0; b < packing.bins.size(); ++b) {
    const Bin& bin = packing.bins[b];
    Rational total(0);
    int count = 0;
    for (int id : bin.all_ids()) {
      if (!touch(id, "bin")) continue;
      total += instance.item_by_id(id).size;
      ++count;
    }
    if (total > 1) {
      report("bin " + std::to_string(b) + " size " + to_decimal_string(total) + " > 1");
    }
    if (instance.problem == Problem::kBpcc && count > instance.k) {
      report("bin " + std::to_string(b) + " holds " + std::to_string(count) +
             " items > k=" + std::to_string(instance.k));
    }
  }

  for (int id : packing.rejected) {
    if (!touch(id, "rejected")) continue;
    if (instance.problem == Problem::kBpcc) {
      report("bpcc solution rejects item " + std::to_string(id));
    } else if (!instance.item_by_id(id).has_penalty()) {
      report("rejected item " + std::to_string(id) + " has no penalty");
    }
  }

  for (int id = 0; id < n; ++id) {
    const int c = seen[static_cast<std::size_t>(id)];
    if (c == 0) report("item " + std::to_string(id) + " missing from the solution");
    if (c > 1) report("item " + std::to_string(id) + " appears " + std::to_string(c) + " times");
  }

  const Rational expected = packing_cost(packing, instance);
  if (packing.cost != expected) {
    report("stored cost " + to_decimal_string(packing.cost) + " != bins+penalties " +
           to_decimal_string(expected));
  }
  return violations;
}

namespace {

// Branch-and-bound state shared by the two exact solvers. Items are packed
// in non-increasing size order; bins open in order and equal residual bins
// are only tried once per decision, which keeps n <= 12 instant.
struct ExactSearch {
  const Instance* instance;
  bool allow_reject = false;
  int k = 0;
  std::vector<int> order;            // item ids, sorted by size desc
  std::vector<Rational> residual;    // free size per open bin
  std::vector<int> slots;            // free cardinality per open bin
  std::vector<std::vector<int>> content;
  std::vector<int> rejected;
  Rational current_penalty{0};

  Rational best_cost{0};
  bool has_best = false;
  Packing best;
  std::int64_t nodes = 0;

  // Memo on (suffix index, open-bin residual multiset): prune when the same
  // state was already reached at no larger prefix cost.
  std::unordered_map<std::string, Rational> memo;

  std::string state_key(std::size_t idx) const {
    std::vector<std::pair<Rational, int>> state;
    for (std::size_t b = 0; b < residual.size(); ++b) {
      state.emplace_back(residual[b], slots[b]);
    }
    std::sort(state.begin(), state.end());
    std::ostringstream os;
    os << idx;
    for (const auto& [r, s] : state) os << '|' << r.get_str() << ',' << s;
    return os.str();
  }

  Rational suffix_size(std::size_t idx) const {
    Rational s(0);
    for (std::size_t i = idx; i < order.size(); ++i) {
      s += instance->item_by_id(order[i]).size;
    }
    return s;
  }

  // Cheap lower bound on additional bins for the unpacked suffix.
  Rational lower_bound(std::size_t idx) const {
    Rational remaining = suffix_size(idx);
    for (std::size_t b = 0; b < residual.size(); ++b) {
      if (slots[b] > 0) remaining -= residual[b];
    }
    Rational bins_so_far(static_cast<long>(residual.size()));
    Rational lb = bins_so_far + current_penalty;
    if (remaining > 0) {
      mpz_class extra;
      mpz_cdiv_q(extra.get_mpz_t(), remaining.get_num().get_mpz_t(),
                 remaining.get_den().get_mpz_t());
      if (!allow_reject) lb += Rational(extra);
    }
    if (!allow_reject && k > 0) {
      long free_slots = 0;
      for (int s : slots) free_slots += s;
      const long need = static_cast<long>(order.size() - idx) - free_slots;
      if (need > 0) {
        const Rational by_count = bins_so_far + Rational((need + k - 1) / k);
        if (by_count > lb) lb = by_count;
      }
    }
    return lb;
  }

  void record() {
    Rational cost(static_cast<long>(residual.size()));
    cost += current_penalty;
    if (!has_best || cost < best_cost) {
      has_best = true;
      best_cost = cost;
      best.bins.clear();
      for (const auto& ids : content) {
        Bin bin;
        bin.large_ids = ids;
        best.bins.push_back(std::move(bin));
      }
      best.rejected = rejected;
      best.cost = cost;
    }
  }

  void dfs(std::size_t idx) {
    ++nodes;
    if (has_best && lower_bound(idx) >= best_cost) return;
    if (idx == order.size()) {
      record();
      return;
    }
    {
      const Rational prefix =
          Rational(static_cast<long>(residual.size())) + current_penalty;
      auto [it, inserted] = memo.try_emplace(state_key(idx), prefix);
      if (!inserted) {
        if (it->second <= prefix) return;
        it->second = prefix;
      }
    }
    const int id = order[idx];
    const Item& item = instance->item_by_id(id);

    // Existing bins, skipping residual duplicates.
    std::vector<std::pair<Rational, int>> tried;
    for (std::size_t b = 0; b < residual.size(); ++b) {
      if (item.size > residual[b]) continue;
      if (k > 0 && slots[b] <= 0) continue;
      const auto key = std::make_pair(residual[b], slots[b]);
      bool dup = false;
      for (const auto& t : tried) {
        if (t.first == key.first && t.second == key.second) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      tried.emplace_back(key);
      residual[b] -= item.size;
      if (k > 0) slots[b] -= 1;
      content[b].push_back(id);
      dfs(idx + 1);
      content[b].pop_back();
      if (k > 0) slots[b] += 1;
      residual[b] += item.size;
    }

    // A new bin.
    residual.push_back(Rational(1) - item.size);
    slots.push_back(k > 0 ? k - 1 : -1);
    content.push_back({id});
    dfs(idx + 1);
    content.pop_back();
    slots.pop_back();
    residual.pop_back();

    // Rejection.
    if (allow_reject && item.has_penalty()) {
      rejected.push_back(id);
      current_penalty += *item.penalty;
      dfs(idx + 1);
      current_penalty -= *item.penalty;
      rejected.pop_back();
    }
  }
};

}  // namespace

ExactResult exact_bpcc(const Instance& instance) {
  if (instance.problem != Problem::kBpcc) throw Error("exact_bpcc wants a bpcc instance");
  if (instance.n() > 12) throw TooLarge("exact_bpcc caps at n=12");

  ExactSearch search;
  search.instance = &instance;
  search.allow_reject = false;
  search.k = instance.k;
  for (const auto& item : instance.items) search.order.push_back(item.id);
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    const auto& ia = instance.item_by_id(a);
    const auto& ib = instance.item_by_id(b);
    if (ia.size != ib.size) return ia.size > ib.size;
    return a < b;
  });
  search.dfs(0);

  ExactResult result;
  result.opt_cost = search.best_cost;
  result.witness = search.best;
  result.nodes_explored = search.nodes;
  return result;
}

ExactResult exact_bpr(const Instance& instance) {
  if (instance.problem != Problem::kBpr) throw Error("exact_bpr wants a bpr instance");
  if (instance.n() > 10) throw TooLarge("exact_bpr caps at n=10");

  ExactSearch search;
  search.instance = &instance;
  search.allow_reject = true;
  search.k = 0;
  for (const auto& item : instance.items) search.order.push_back(item.id);
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    const auto& ia = instance.item_by_id(a);
    const auto& ib = instance.item_by_id(b);
    if (ia.size != ib.size) return ia.size > ib.size;
    return a < b;
  });
  search.dfs(0);

  ExactResult result;
  result.opt_cost = search.best_cost;
  result.witness = search.best;
  result.nodes_explored = search.nodes;
  return result;
}

Packing ffd_baseline(const Instance& instance) {
  std::vector<int> order;
  for (const auto& item : instance.items) order.push_back(item.id);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ia = instance.item_by_id(a);
    const auto& ib = instance.item_by_id(b);
    if (ia.size != ib.size) return ia.size > ib.size;
    return a < b;
  });

  Packing packing;
  std::vector<Rational> residual;
  std::vector<int> slots;
  for (int id : order) {
    const Item& item = instance.item_by_id(id);
    bool placed = false;
    for (std::size_t b = 0; b < residual.size(); ++b) {
      const bool slot_ok =
          instance.problem != Problem::kBpcc || slots[b] > 0;
      if (slot_ok && item.size <= residual[b]) {
        residual[b] -= item.size;
        if (instance.problem == Problem::kBpcc) slots[b] -= 1;
        packing.bins[b].large_ids.push_back(id);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    if (instance.problem == Problem::kBpr && item.has_penalty() && *item.penalty < 1) {
      packing.rejected.push_back(id);
      continue;
    }
    Bin bin;
    bin.large_ids.push_back(id);
    packing.bins.push_back(std::move(bin));
    residual.push_back(Rational(1) - item.size);
    slots.push_back(instance.problem == Problem::kBpcc ? instance.k - 1 : -1);
  }
  packing.cost = packing_cost(packing, instance);
  return packing;
}

double brute_knapsack(const PricingProblem& problem) {
  long copies = 0;
  for (const auto& item : problem.items) copies += std::max(0, item.multiplicity);
  if (copies > 20) throw TooLarge("brute_knapsack caps at 20 expanded copies");

  double best = 0.0;
  std::vector<int> counts(problem.items.size(), 0);
  const long card_cap = problem.cardinality_bound.value_or(copies);

  std::function<void(std::size_t, Rational, long, double)> dfs =
      [&](std::size_t idx, Rational size, long count, double profit) {
        const bool ok = problem.capacity_strict ? size < problem.capacity
                                                : size <= problem.capacity;
        if (!ok || count > card_cap) return;
        best = std::max(best, profit);
        if (idx == problem.items.size()) return;
        const auto& item = problem.items[idx];
        for (int c = 0; c <= item.multiplicity; ++c) {
          dfs(idx + 1, size + Rational(c) * item.size, count + c,
              profit + c * item.profit);
        }
      };
  dfs(0, Rational(0), 0, 0.0);
  return best;
}

}  // namespace afptas
