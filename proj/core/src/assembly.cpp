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

#include "afptas/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "afptas/errors.hpp"
#include "afptas/log.hpp"

namespace afptas {

namespace {

constexpr double kIntTol = 1e-7;

long eps_group_size(const RoundedInstance& rounded) {
  return (1 / rounded.epsilon).get_num().get_si();
}

// Displaced small items: BPCC always group-packs; BPR rejects cheap-penalty
// items and group-packs the rest (which then have size <= eps).
bool displaced_item_packs(const Item& item, const RoundedInstance& rounded) {
  if (rounded.problem == Problem::kBpcc) return true;
  const Rational& eps = rounded.epsilon;
  if (!item.has_penalty()) return true;
  if (*item.penalty > eps) return true;
  if (*item.penalty == eps && item.size <= eps) return true;
  return false;
}

}  // namespace

MigrationResult migrate_to_active_windows(const FractionalSolution& sol,
                                          const WindowUniverse& universe,
                                          ConfigurationPool& pool,
                                          LemmaDiagnostics& diag) {
  MigrationResult result;
  result.window_set = active_windows(sol, universe, pool);
  const std::set<int> active(result.window_set.begin(), result.window_set.end());

  FractionalSolution out;
  out.objective = sol.objective;
  out.is_basic = false;
  out.z_small = sol.z_small;
  out.z_type = sol.z_type;
  out.y.resize(sol.y.size());

  // Per-window x mass and migration shares.
  std::map<int, double> window_mass;                      // grid -> X_w
  std::map<int, std::vector<std::pair<int, double>>> shares;  // w' -> (target grid, x)
  std::map<std::pair<int, int>, double> x_new;

  for (const auto& [gc, v] : sol.x) {
    if (!gc.window.has_value()) {
      x_new[{gc.config_id, -1}] += v;
      continue;
    }
    const int g = universe.grid_index(*gc.window);
    window_mass[g] += v;
    const Configuration& c = pool.get(gc.config_id);
    const int main_g = universe.grid_index(universe.main_window(c.total_size, c.total_items));
    if (active.count(g) > 0) {
      x_new[{gc.config_id, g}] += v;
    } else {
      x_new[{gc.config_id, main_g}] += v;
      shares[g].emplace_back(main_g, v);
    }
  }

  // Y mass moves with the x mass, split proportionally; the last target takes
  // the remainder so per-item totals are conserved.
  for (std::size_t i = 0; i < sol.y.size(); ++i) {
    std::map<int, double> y_new;
    for (const auto& [g, y] : sol.y[i]) {
      if (active.count(g) > 0) {
        y_new[g] += y;
        continue;
      }
      auto it = shares.find(g);
      const double mass = window_mass.count(g) ? window_mass[g] : 0.0;
      if (it == shares.end() || mass <= 0.0) {
        // Rows force Y to zero on windows without bins; park the crumb on the
        // first active window (or drop it when no bins exist at all).
        if (!result.window_set.empty() && y > 0) y_new[result.window_set.front()] += y;
        continue;
      }
      double moved = 0.0;
      for (std::size_t s = 0; s < it->second.size(); ++s) {
        const auto& [target, xv] = it->second[s];
        const double part = (s + 1 == it->second.size()) ? y - moved : y * (xv / mass);
        y_new[target] += part;
        moved += part;
      }
    }
    for (const auto& [g, y] : y_new) {
      if (y != 0.0) out.y[i].emplace_back(g, y);
    }
  }

  for (const auto& [key, v] : x_new) {
    if (v <= 0.0) continue;
    GeneralizedConfiguration gc;
    gc.config_id = key.first;
    if (key.second >= 0) gc.window = universe.grid_window(key.second);
    out.x.emplace_back(gc, v);
  }

  // Conservation drift (the remainder split keeps these at rounding noise).
  diag.migration_checked = true;
  diag.migration_x_error = std::fabs(out.x_total() - sol.x_total());
  std::map<int, double> before, after;
  for (const auto& [gc, v] : sol.x) before[gc.config_id] += v;
  for (const auto& [gc, v] : out.x) after[gc.config_id] += v;
  for (const auto& [id, v] : before) {
    diag.migration_config_error =
        std::max(diag.migration_config_error, std::fabs(after[id] - v));
  }
  for (std::size_t i = 0; i < sol.y.size(); ++i) {
    double b = 0, a = 0;
    for (const auto& [g, y] : sol.y[i]) b += y;
    for (const auto& [g, y] : out.y[i]) a += y;
    // Crumbs on mass-less windows are legitimately dropped when W' is empty.
    if (!result.window_set.empty()) {
      diag.migration_y_error = std::max(diag.migration_y_error, std::fabs(a - b));
    }
  }

  result.solution = std::move(out);
  return result;
}

IntegralAssignment round_up_and_evict(const FractionalSolution& sol,
                                      const RoundedInstance& rounded,
                                      const WindowUniverse& universe,
                                      ConfigurationPool& pool,
                                      LemmaDiagnostics& diag) {
  IntegralAssignment out;
  const bool bpr = rounded.problem == Problem::kBpr;

  // x_hat = ceil(x*).
  double x_star_total = 0.0;
  for (const auto& [gc, v] : sol.x) {
    if (v <= 1e-11) continue;
    x_star_total += v;
    const long up = static_cast<long>(std::ceil(v - kIntTol));
    const double frac = v - std::floor(v + kIntTol);
    if (frac > kIntTol) ++diag.fractional_x;
    const int g = gc.window.has_value() ? universe.grid_index(*gc.window) : -1;
    if (up > 0) out.x_hat[{gc.config_id, g}] += up;
  }

  // Small items: integral window pick, rejection (BPR), or eviction.
  for (std::size_t i = 0; i < sol.y.size(); ++i) {
    int picked = -1;
    bool fractional = false;
    double total = 0.0;
    for (const auto& [g, y] : sol.y[i]) {
      total += y;
      if (y >= 1.0 - kIntTol && picked < 0) {
        picked = g;
      } else if (y > kIntTol) {
        fractional = true;
      }
    }
    const double z = bpr ? sol.z_small[i] : 0.0;
    if (picked >= 0 && !fractional) {
      out.window_smalls[picked].push_back(static_cast<int>(i));
    } else if (bpr && total <= kIntTol) {
      // Covered by rejection mass.
      out.rejected_small.push_back(static_cast<int>(i));
      if (z < 1.0 - 1e-4) {
        throw InternalInvariantViolation("small item neither packed nor rejected");
      }
    } else {
      out.evicted.push_back(static_cast<int>(i));
      ++diag.fractional_small;
    }
  }

  // BPR: the uncovered tail of each type is rejected.
  if (bpr) {
    for (int v = 0; v < rounded.h_size(); ++v) {
      long slots = 0;
      for (const auto& [key, copies] : out.x_hat) {
        slots += copies * pool.get(key.first).counts[static_cast<std::size_t>(v)];
      }
      const long miss = rounded.item_types[static_cast<std::size_t>(v)].multiplicity - slots;
      if (miss > 0) out.rejected_large[v] = miss;
    }
  } else {
    for (int v = 0; v < rounded.h_size(); ++v) {
      long slots = 0;
      for (const auto& [key, copies] : out.x_hat) {
        slots += copies * pool.get(key.first).counts[static_cast<std::size_t>(v)];
      }
      const long need = rounded.item_types[static_cast<std::size_t>(v)].multiplicity;
      while (slots < need) {
        // Integer-side repair; with a refined basic solution this never runs.
        std::vector<int> counts(static_cast<std::size_t>(rounded.h_size()), 0);
        counts[static_cast<std::size_t>(v)] = 1;
        const int sing = pool.intern(counts);
        int g = -1;
        if (universe.enabled()) {
          const Configuration& c = pool.get(sing);
          g = universe.grid_index(universe.main_window(c.total_size, c.total_items));
        }
        out.x_hat[{sing, g}] += 1;
        ++slots;
        log_info("coverage repair for type ", v);
      }
    }
  }

  // Exact integer-side window rows; evict (largest first) on drift.
  if (universe.enabled()) {
    std::map<int, long> bins_per_window;
    for (const auto& [key, copies] : out.x_hat) {
      if (key.second >= 0) bins_per_window[key.second] += copies;
    }
    for (auto& [g, idxs] : out.window_smalls) {
      std::sort(idxs.begin(), idxs.end(), [&](int a, int b) {
        const auto& ia = rounded.small_items[static_cast<std::size_t>(a)];
        const auto& ib = rounded.small_items[static_cast<std::size_t>(b)];
        if (ia.size != ib.size) return ia.size > ib.size;
        return ia.id < ib.id;
      });
      const long bins = bins_per_window.count(g) ? bins_per_window[g] : 0;
      const Window w = universe.grid_window(g);
      Rational mass(0);
      for (int i : idxs) mass += rounded.small_items[static_cast<std::size_t>(i)].size;
      const Rational size_cap = universe.window_size(w.t) * Rational(bins);
      const long count_cap =
          w.count.has_value() ? *w.count * bins : static_cast<long>(idxs.size());
      while (!idxs.empty() &&
             (mass > size_cap || static_cast<long>(idxs.size()) > count_cap)) {
        const int i = idxs.front();
        idxs.erase(idxs.begin());
        mass -= rounded.small_items[static_cast<std::size_t>(i)].size;
        out.evicted.push_back(i);
        log_info("window row repair: evicted small index ", i);
      }
    }
  }

  std::sort(out.evicted.begin(), out.evicted.end());

  // Rounding overhead bookkeeping (lemma: <= |H| + 2|W'| resp. |H| + |W'|).
  double hat_total = 0.0;
  for (const auto& [key, copies] : out.x_hat) hat_total += static_cast<double>(copies);
  diag.ceil_increase = static_cast<long>(std::ceil(hat_total - x_star_total - 1e-9));
  return out;
}

StagedSolution place_small_items(const IntegralAssignment& assignment,
                                 const RoundedInstance& rounded,
                                 const WindowUniverse& universe,
                                 const ConfigurationPool& pool,
                                 const Instance& instance,
                                 LemmaDiagnostics& diag) {
  StagedSolution staged;
  staged.stage = Stage::kInter;

  // Concrete large items per type, cheapest-penalty members rejected (BPR).
  std::vector<std::vector<int>> type_queue(static_cast<std::size_t>(rounded.h_size()));
  for (int v = 0; v < rounded.h_size(); ++v) {
    std::vector<int> members = rounded.item_types[static_cast<std::size_t>(v)].member_ids;
    long reject = 0;
    if (auto it = assignment.rejected_large.find(v); it != assignment.rejected_large.end()) {
      reject = it->second;
    }
    if (reject > 0) {
      std::sort(members.begin(), members.end(), [&](int a, int b) {
        const auto& ia = instance.item_by_id(a);
        const auto& ib = instance.item_by_id(b);
        if (*ia.penalty != *ib.penalty) return *ia.penalty < *ib.penalty;
        return a < b;
      });
      for (long r = 0; r < reject && !members.empty(); ++r) {
        staged.rejected.push_back(members.front());
        members.erase(members.begin());
      }
      std::sort(members.begin(), members.end());
    }
    type_queue[static_cast<std::size_t>(v)] = std::move(members);
  }

  // Config bins in deterministic (window, config) order.
  std::map<int, std::vector<std::size_t>> window_bins;  // grid -> bin indices
  for (const auto& [key, copies] : assignment.x_hat) {
    const auto& [config_id, grid] = key;
    const Configuration& config = pool.get(config_id);
    for (long copy = 0; copy < copies; ++copy) {
      BinDraft bin;
      bin.kind = BinDraft::kConfig;
      bin.config_id = config_id;
      if (grid >= 0) bin.window = universe.grid_window(grid);
      for (std::size_t v = 0; v < config.counts.size(); ++v) {
        for (int c = 0; c < config.counts[v]; ++c) {
          auto& queue = type_queue[v];
          if (queue.empty()) break;  // surplus slot
          bin.large_ids.push_back(queue.front());
          queue.erase(queue.begin());
        }
      }
      if (grid >= 0) window_bins[grid].push_back(staged.bins.size());
      staged.bins.push_back(std::move(bin));
    }
  }
  for (const auto& queue : type_queue) {
    if (!queue.empty()) {
      throw InternalInvariantViolation("large item left without a slot");
    }
  }

  // Round-robin small items per window; bin j takes items j, j+X, j+2X, ...
  std::vector<int> removed_small;  // small indices displaced by the removal step
  diag.balance_checked = universe.enabled();
  for (const auto& [g, idxs] : assignment.window_smalls) {
    if (idxs.empty()) continue;
    auto bins_it = window_bins.find(g);
    if (bins_it == window_bins.end()) {
      throw InternalInvariantViolation("small items assigned to a window with no bins");
    }
    const auto& bins = bins_it->second;
    const long x_w = static_cast<long>(bins.size());
    for (std::size_t pos = 0; pos < idxs.size(); ++pos) {
      const int small_idx = idxs[pos];
      const Item& item = rounded.small_items[static_cast<std::size_t>(small_idx)];
      staged.bins[bins[pos % static_cast<std::size_t>(x_w)]].small_ids.push_back(item.id);
    }

    const Window w = universe.grid_window(g);
    Rational total(0);
    for (int i : idxs) total += rounded.small_items[static_cast<std::size_t>(i)].size;

    for (std::size_t b = 0; b < bins.size(); ++b) {
      BinDraft& bin = staged.bins[bins[b]];
      if (bin.small_ids.empty()) continue;
      // The first assigned item is the bin's largest small item.
      const int largest = bin.small_ids.front();
      const Rational& largest_size = instance.item_by_id(largest).size;
      const bool skip = universe.is_zero_window(w) && largest_size == 0;
      if (!skip) {
        bin.small_ids.erase(bin.small_ids.begin());
        for (int i : assignment.window_smalls.at(g)) {
          if (rounded.small_items[static_cast<std::size_t>(i)].id == largest) {
            removed_small.push_back(i);
            break;
          }
        }
      }
      // Balance: remaining small mass * X(W) <= total small mass of the window.
      Rational mass(0);
      for (int id : bin.small_ids) mass += instance.item_by_id(id).size;
      if (mass * Rational(x_w) > total) diag.balance_ok = false;
    }
  }

  // Dedicated bins for evicted items.
  for (int i : assignment.evicted) {
    BinDraft bin;
    bin.kind = BinDraft::kDedicated;
    if (universe.enabled()) bin.window = universe.grid_window(0);
    bin.small_ids.push_back(rounded.small_items[static_cast<std::size_t>(i)].id);
    staged.bins.push_back(std::move(bin));
  }

  // Removed items: group 1/eps per bin, or reject (BPR rule).
  const long group = eps_group_size(rounded);
  BinDraft current;
  current.kind = BinDraft::kRemovalGroup;
  for (int i : removed_small) {
    const Item& item = rounded.small_items[static_cast<std::size_t>(i)];
    if (!displaced_item_packs(instance.item_by_id(item.id), rounded)) {
      staged.rejected.push_back(item.id);
      continue;
    }
    current.small_ids.push_back(item.id);
    if (static_cast<long>(current.small_ids.size()) == group) {
      staged.bins.push_back(current);
      current.small_ids.clear();
    }
  }
  if (!current.small_ids.empty()) staged.bins.push_back(current);

  // BPR: rejected small items.
  for (int i : assignment.rejected_small) {
    staged.rejected.push_back(rounded.small_items[static_cast<std::size_t>(i)].id);
  }
  return staged;
}

StagedSolution repack_final(StagedSolution inter, const RoundedInstance& rounded,
                            const WindowUniverse& universe, const Instance& instance,
                            LemmaDiagnostics& diag) {
  StagedSolution staged = std::move(inter);
  staged.stage = Stage::kFinal;
  const long group = eps_group_size(rounded);
  const Rational eps = rounded.epsilon;

  std::vector<int> overflow_pool;                 // item ids
  std::vector<std::vector<int>> leftover_sets;    // per source bin

  for (auto& bin : staged.bins) {
    if (bin.kind != BinDraft::kConfig || bin.small_ids.empty()) continue;
    Rational free(1);
    for (int id : bin.large_ids) free -= instance.item_by_id(id).size;

    std::vector<int> smalls = std::move(bin.small_ids);
    bin.small_ids.clear();
    std::sort(smalls.begin(), smalls.end(), [&](int a, int b) {
      const auto& ia = instance.item_by_id(a);
      const auto& ib = instance.item_by_id(b);
      if (ia.size != ib.size) return ia.size < ib.size;
      return a < b;
    });

    Rational used(0);
    std::size_t pos = 0;
    for (; pos < smalls.size(); ++pos) {
      const Rational& s = instance.item_by_id(smalls[pos]).size;
      if (used + s > free) break;
      used += s;
      bin.small_ids.push_back(smalls[pos]);
    }
    if (pos < smalls.size()) {
      // First non-fitting item, then the leftovers (all at least as large).
      const int first = smalls[pos++];
      if (displaced_item_packs(instance.item_by_id(first), rounded)) {
        overflow_pool.push_back(first);
      } else {
        staged.rejected.push_back(first);
      }
      std::vector<int> leftover(smalls.begin() + static_cast<long>(pos), smalls.end());
      if (!leftover.empty()) {
        // Lemma check: leftover mass <= eps w_s/(1+eps); count <= eps w_n.
        if (bin.window.has_value()) {
          Rational mass(0);
          for (int id : leftover) mass += instance.item_by_id(id).size;
          const Rational w_s = universe.window_size(bin.window->t);
          if (mass * (1 + eps) > eps * w_s) diag.leftover_ok = false;
          if (bin.window->count.has_value() &&
              Rational(static_cast<long>(leftover.size())) > eps * Rational(*bin.window->count)) {
            diag.leftover_ok = false;
          }
        }
        leftover_sets.push_back(std::move(leftover));
      }
    }
  }

  // First-overflow items, 1/eps per new bin.
  for (std::size_t at = 0; at < overflow_pool.size(); at += static_cast<std::size_t>(group)) {
    BinDraft bin;
    bin.kind = BinDraft::kOverflowGroup;
    const std::size_t end = std::min(overflow_pool.size(), at + static_cast<std::size_t>(group));
    bin.small_ids.assign(overflow_pool.begin() + static_cast<long>(at),
                         overflow_pool.begin() + static_cast<long>(end));
    staged.bins.push_back(std::move(bin));
  }

  // Leftovers of every 1/eps bins into one new bin.
  for (std::size_t at = 0; at < leftover_sets.size(); at += static_cast<std::size_t>(group)) {
    BinDraft bin;
    bin.kind = BinDraft::kLeftoverGroup;
    const std::size_t end = std::min(leftover_sets.size(), at + static_cast<std::size_t>(group));
    for (std::size_t s = at; s < end; ++s) {
      bin.small_ids.insert(bin.small_ids.end(), leftover_sets[s].begin(),
                           leftover_sets[s].end());
    }
    staged.bins.push_back(std::move(bin));
  }
  return staged;
}

void attach_set_aside(StagedSolution& staged, const RoundedInstance& rounded) {
  for (const auto& item : rounded.set_aside) {
    BinDraft bin;
    bin.kind = BinDraft::kSetAside;
    bin.large_ids.push_back(item.id);
    staged.bins.push_back(std::move(bin));
  }
}

void spread_zero_items(StagedSolution& staged, const RoundedInstance& rounded) {
  std::vector<int> zeros;
  for (const auto& item : rounded.small_items) {
    if (item.size == 0) zeros.push_back(item.id);
  }
  if (zeros.empty()) return;
  const long k = rounded.k;
  std::size_t at = 0;
  for (auto& bin : staged.bins) {
    long free = k - bin.item_count();
    while (at < zeros.size() && free > 0) {
      bin.small_ids.push_back(zeros[at++]);
      --free;
    }
  }
  while (at < zeros.size()) {
    BinDraft bin;
    bin.kind = BinDraft::kZeroSpread;
    for (long c = 0; c < k && at < zeros.size(); ++c) {
      bin.small_ids.push_back(zeros[at++]);
    }
    staged.bins.push_back(std::move(bin));
  }
}

Packing finalize_packing(const StagedSolution& staged, const Instance& instance) {
  Packing packing;
  for (const auto& bin : staged.bins) {
    if (bin.large_ids.empty() && bin.small_ids.empty()) continue;
    Bin out;
    out.large_ids = bin.large_ids;
    out.small_ids = bin.small_ids;
    packing.bins.push_back(std::move(out));
  }
  packing.rejected = staged.rejected;
  std::sort(packing.rejected.begin(), packing.rejected.end());
  packing.cost = packing_cost(packing, instance);
  return packing;
}

}  // namespace afptas
