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

#include "afptas/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "afptas/errors.hpp"

namespace afptas {

namespace {

constexpr std::int64_t kUnset = -1;

struct Group {
  int item_index;        // index into the caller's item vector
  int copies;            // 2^j block (or the remainder block)
  std::int64_t weight;   // scaled integer size of the whole block
  std::int64_t q;        // scaled profit of the whole block
  double profit;         // true profit of the whole block
};

}  // namespace

struct KccSweep::Impl {
  std::vector<PricingItem> items;
  int max_card = 0;
  bool trivial = false;        // nothing fits or nothing has positive profit

  std::int64_t budget = 0;     // max admissible scaled size
  mpz_class denom;             // common denominator of the sizes
  std::vector<Group> groups;
  double scale_k = 1.0;

  // DP table, row-major [cnt][q]: minimal scaled size reaching exactly that
  // scaled profit with exactly cnt copies; kUnset when unreachable.
  int axis = 0;                // count axis limit actually used by the table
  std::int64_t q_cap = 0;
  std::vector<std::int64_t> table;
  // One bit plane per group marking the states it improved.
  std::vector<std::vector<std::uint64_t>> planes;

  // Per bound c: best (q, cnt) cell; best_value caches the true profit.
  std::vector<double> best_value;
  std::vector<std::pair<std::int64_t, int>> best_cell;

  std::size_t cell(int cnt, std::int64_t q) const {
    return static_cast<std::size_t>(cnt) * static_cast<std::size_t>(q_cap + 1) +
           static_cast<std::size_t>(q);
  }

  void run(const Rational& capacity, bool capacity_strict, const Rational& eps);
  PricingResult reconstruct(int c) const;
};

void KccSweep::Impl::run(const Rational& capacity, bool capacity_strict,
                         const Rational& eps) {
  if (eps <= 0) throw InvalidEpsilon("pricing accuracy must be positive");
  best_value.assign(static_cast<std::size_t>(max_card) + 1, 0.0);
  best_cell.assign(static_cast<std::size_t>(max_card) + 1, {-1, -1});

  // Integer size budget over the common denominator of the item sizes.
  denom = 1;
  for (const auto& item : items) {
    mpz_class d = item.size.get_den();
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
  }
  const mpz_class budget_z = integer_budget(capacity * Rational(denom), capacity_strict);
  if (budget_z < 0 || max_card == 0) {
    trivial = true;
    return;
  }
  if (!budget_z.fits_slong_p()) {
    throw NumericalInstability("pricing size budget exceeds 63 bits (denominator " +
                               denom.get_str() + ")");
  }
  budget = budget_z.get_si();

  // Expand multiplicities, capped by how many copies fit the budget alone.
  // Non-positive profits never help a maximization and are left out.
  std::vector<std::int64_t> weights(items.size(), 0);
  std::vector<int> copies(items.size(), 0);
  long total_copies = 0;
  double p_max = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& item = items[i];
    if (item.size < 0 || item.size > 1) {
      throw InvalidItem("pricing item size out of [0,1]");
    }
    mpz_class w_z = item.size.get_num() * (denom / item.size.get_den());
    if (!w_z.fits_slong_p()) {
      throw NumericalInstability("pricing item size exceeds 63 bits after scaling");
    }
    weights[i] = w_z.get_si();
    if (item.multiplicity <= 0 || item.profit <= 0.0) continue;
    long fit = item.multiplicity;
    if (weights[i] > 0) fit = std::min<long>(fit, budget / weights[i]);
    if (fit <= 0) continue;
    copies[i] = static_cast<int>(fit);
    total_copies += fit;
    p_max = std::max(p_max, item.profit);
  }
  if (total_copies == 0) {
    trivial = true;
    return;
  }

  // No selection can hold more copies than fit the budget together, so the
  // table's count axis clamps there; the answer arrays still run to max_card.
  {
    std::vector<std::pair<std::int64_t, int>> by_weight;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (copies[i] > 0) by_weight.emplace_back(weights[i], copies[i]);
    }
    std::sort(by_weight.begin(), by_weight.end());
    long fit_together = 0;
    std::int64_t used = 0;
    for (const auto& [w, c] : by_weight) {
      if (w == 0) {
        fit_together += c;
        continue;
      }
      const long can = std::min<long>(c, (budget - used) / w);
      fit_together += can;
      used += static_cast<std::int64_t>(can) * w;
      if (can < c) break;
    }
    axis = static_cast<int>(std::min<long>({max_card, total_copies, fit_together}));
  }
  if (axis == 0) {
    trivial = true;
    return;
  }

  // K = eps * P_max / m with m the expanded item count; each selected binary
  // block loses less than K to flooring, and at most m blocks are selected.
  scale_k = to_double(eps) * p_max / static_cast<double>(total_copies);
  q_cap = static_cast<std::int64_t>(
              std::floor(static_cast<double>(axis) * (p_max / scale_k))) +
          4;
  const double state_estimate =
      static_cast<double>(axis + 1) * static_cast<double>(q_cap + 1);
  if (state_estimate > 4e8) {
    throw NumericalInstability("pricing table too large (" +
                               std::to_string(state_estimate) + " states)");
  }

  for (std::size_t i = 0; i < items.size(); ++i) {
    int remaining = copies[i];
    int block = 1;
    while (remaining > 0) {
      const int take = std::min(block, remaining);
      Group g;
      g.item_index = static_cast<int>(i);
      g.copies = take;
      g.weight = weights[i] * take;
      g.profit = items[i].profit * take;
      g.q = static_cast<std::int64_t>(std::floor(g.profit / scale_k));
      groups.push_back(g);
      remaining -= take;
      block *= 2;
    }
  }

  const std::size_t n_states =
      static_cast<std::size_t>(axis + 1) * static_cast<std::size_t>(q_cap + 1);
  table.assign(n_states, kUnset);
  table[cell(0, 0)] = 0;
  const std::size_t plane_words = (n_states + 63) / 64;
  planes.assign(groups.size(), {});

  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Group& grp = groups[g];
    if (grp.copies > axis || grp.q > q_cap) continue;
    std::vector<std::uint64_t> plane(plane_words, 0);
    bool touched = false;
    for (int cnt = axis; cnt >= grp.copies; --cnt) {
      const std::size_t row = cell(cnt, 0);
      const std::size_t prev_row = cell(cnt - grp.copies, 0);
      for (std::int64_t q = q_cap; q >= grp.q; --q) {
        const std::int64_t prev = table[prev_row + static_cast<std::size_t>(q - grp.q)];
        if (prev == kUnset) continue;
        const std::int64_t cand = prev + grp.weight;
        if (cand > budget) continue;
        std::int64_t& slot = table[row + static_cast<std::size_t>(q)];
        if (slot == kUnset || cand < slot) {
          slot = cand;
          const std::size_t bit = row + static_cast<std::size_t>(q);
          plane[bit >> 6] |= (1ull << (bit & 63));
          touched = true;
        }
      }
    }
    if (touched) planes[g] = std::move(plane);
  }

  // Best cell per exact count, then prefix-combine so entries are
  // non-decreasing in the cardinality bound. Ties prefer smaller size, then
  // fewer items.
  std::pair<std::int64_t, int> running{-1, -1};
  std::int64_t running_q = -1;
  std::int64_t running_size = std::numeric_limits<std::int64_t>::max();
  for (int cnt = 0; cnt <= max_card; ++cnt) {
    if (cnt <= axis) {
      const std::size_t row = cell(cnt, 0);
      for (std::int64_t q = q_cap; q > running_q; --q) {
        const std::int64_t size = table[row + static_cast<std::size_t>(q)];
        if (size == kUnset) continue;
        running_q = q;
        running_size = size;
        running = {q, cnt};
        break;
      }
      if (running_q >= 0 && running.second != cnt) {
        const std::int64_t size = table[row + static_cast<std::size_t>(running_q)];
        if (size != kUnset && size < running_size) {
          running_size = size;
          running = {running_q, cnt};
        }
      }
    }
    best_cell[static_cast<std::size_t>(cnt)] = running;
  }

  std::pair<std::int64_t, int> last{-2, -2};
  double last_value = 0.0;
  for (int cnt = 0; cnt <= max_card; ++cnt) {
    const auto cellref = best_cell[static_cast<std::size_t>(cnt)];
    if (cellref != last) {
      last = cellref;
      last_value = cellref.first < 0 ? 0.0 : reconstruct(cnt).value;
    }
    best_value[static_cast<std::size_t>(cnt)] = last_value;
  }
}

PricingResult KccSweep::Impl::reconstruct(int c) const {
  PricingResult result;
  result.counts.assign(items.size(), 0);
  result.value = 0.0;
  if (trivial) return result;
  auto [q, cnt] = best_cell[static_cast<std::size_t>(c)];
  if (q < 0) return result;

  for (std::size_t g = groups.size(); g-- > 0;) {
    if (planes[g].empty()) continue;
    const std::size_t bit = cell(cnt, q);
    if ((planes[g][bit >> 6] >> (bit & 63)) & 1ull) {
      const Group& grp = groups[g];
      result.counts[static_cast<std::size_t>(grp.item_index)] += grp.copies;
      result.value += grp.profit;
      q -= grp.q;
      cnt -= grp.copies;
      if (q == 0 && cnt == 0) break;
    }
  }
  if (q != 0 || cnt != 0) {
    throw InternalInvariantViolation("pricing backtrack failed to reach the origin");
  }
  return result;
}

KccSweep::KccSweep(const std::vector<PricingItem>& items, const Rational& capacity,
                   bool capacity_strict, int max_cardinality, const Rational& eps)
    : impl_(std::make_unique<Impl>()) {
  if (max_cardinality < 0) {
    throw InvalidCardinality("negative cardinality bound in pricing");
  }
  impl_->items = items;
  impl_->max_card = max_cardinality;
  impl_->run(capacity, capacity_strict, eps);
}

KccSweep::~KccSweep() = default;
KccSweep::KccSweep(KccSweep&&) noexcept = default;
KccSweep& KccSweep::operator=(KccSweep&&) noexcept = default;

int KccSweep::max_cardinality() const { return impl_->max_card; }

double KccSweep::value(int c) const {
  if (c < 0 || c > impl_->max_card) {
    throw InvalidCardinality("sweep entry out of range");
  }
  if (impl_->trivial) return 0.0;
  return impl_->best_value[static_cast<std::size_t>(c)];
}

PricingResult KccSweep::result(int c) const {
  if (c < 0 || c > impl_->max_card) {
    throw InvalidCardinality("sweep entry out of range");
  }
  if (impl_->trivial) {
    PricingResult r;
    r.counts.assign(impl_->items.size(), 0);
    return r;
  }
  return impl_->reconstruct(c);
}

PricingResult kcc_fptas(const PricingProblem& problem) {
  if (!problem.cardinality_bound.has_value()) {
    throw InvalidCardinality("kcc_fptas requires a cardinality bound");
  }
  KccSweep sweep(problem.items, problem.capacity, problem.capacity_strict,
                 *problem.cardinality_bound, problem.eps);
  return sweep.result(*problem.cardinality_bound);
}

PricingResult knapsack_fptas(const PricingProblem& problem) {
  // Cardinality never binds once the axis covers every copy; the sweep clamps
  // its table to the copies that can actually fit together.
  long total = 0;
  for (const auto& item : problem.items) {
    total += std::max(0, item.multiplicity);
  }
  total = std::min<long>(total, 1 << 20);
  KccSweep sweep(problem.items, problem.capacity, problem.capacity_strict,
                 static_cast<int>(total), problem.eps);
  return sweep.result(static_cast<int>(total));
}

std::vector<PricingResult> kcc_sweep(const std::vector<PricingItem>& items,
                                     const Rational& capacity, bool capacity_strict,
                                     int max_cardinality, const Rational& eps) {
  KccSweep sweep(items, capacity, capacity_strict, max_cardinality, eps);
  std::vector<PricingResult> out;
  out.reserve(static_cast<std::size_t>(max_cardinality) + 1);
  for (int c = 0; c <= max_cardinality; ++c) out.push_back(sweep.result(c));
  return out;
}

}  // namespace afptas
