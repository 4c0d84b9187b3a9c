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

#include "afptas/master.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <set>

#include "afptas/errors.hpp"
#include "afptas/log.hpp"
#include "afptas/pricing.hpp"

namespace afptas {

double FractionalSolution::x_total() const {
  double t = 0.0;
  for (const auto& [gc, v] : x) t += v;
  return t;
}

double FractionalSolution::y_total(int small_idx) const {
  double t = 0.0;
  for (const auto& [g, v] : y[static_cast<std::size_t>(small_idx)]) t += v;
  return t;
}

MasterLP::MasterLP(const RoundedInstance& rounded, const WindowUniverse& universe,
                   ConfigurationPool& pool, SolverOptions options)
    : rounded_(&rounded), universe_(&universe), pool_(&pool), options_(std::move(options)) {
  if (universe_->enabled()) {
    window_rows_.resize(static_cast<std::size_t>(universe_->grid_size()));
    for (int g = 0; g < universe_->grid_size(); ++g) window_rows_[static_cast<std::size_t>(g)] = g;
  }
  init_rows();
}

MasterLP::MasterLP(const RoundedInstance& rounded, const WindowUniverse& universe,
                   ConfigurationPool& pool, SolverOptions options,
                   std::vector<int> window_subset)
    : rounded_(&rounded),
      universe_(&universe),
      pool_(&pool),
      options_(std::move(options)),
      reduced_mode_(true),
      window_rows_(std::move(window_subset)) {
  init_rows();
}

void MasterLP::init_rows() {
  const int h = rounded_->h_size();
  const int s = universe_->enabled() ? static_cast<int>(rounded_->small_items.size()) : 0;
  const int w = static_cast<int>(window_rows_.size());
  const bool counts = universe_->enabled() && !universe_->scalar();

  grid_slot_.assign(universe_->enabled()
                        ? static_cast<std::size_t>(universe_->grid_size())
                        : 0,
                    -1);
  for (int slot = 0; slot < w; ++slot) {
    grid_slot_[static_cast<std::size_t>(window_rows_[static_cast<std::size_t>(slot)])] = slot;
  }

  std::vector<double> rhs;
  for (int v = 0; v < h; ++v) {
    rhs.push_back(static_cast<double>(rounded_->item_types[static_cast<std::size_t>(v)].multiplicity));
  }
  for (int i = 0; i < s; ++i) rhs.push_back(1.0);
  for (int g = 0; g < w; ++g) rhs.push_back(0.0);          // size rows
  if (counts) {
    for (int g = 0; g < w; ++g) rhs.push_back(0.0);        // count rows
  }

  lp_ = std::make_unique<DenseSimplex>(std::move(rhs));
  // Surplus column per >= row, added first so their ids equal the row ids.
  for (int r = 0; r < lp_->rows(); ++r) {
    lp_->add_column(0.0, {{r, -1.0}});
    Tag tag;
    tag.kind = Tag::kSlack;
    tags_.push_back(tag);
  }
}

long MasterLP::rows() const { return lp_->rows(); }

int MasterLP::coverage_row(int type) const { return type; }

int MasterLP::small_row(int small_idx) const { return rounded_->h_size() + small_idx; }

int MasterLP::size_row(int grid_idx) const {
  const int slot = grid_slot_[static_cast<std::size_t>(grid_idx)];
  if (slot < 0) return -1;
  const int s = universe_->enabled() ? static_cast<int>(rounded_->small_items.size()) : 0;
  return rounded_->h_size() + s + slot;
}

int MasterLP::count_row(int grid_idx) const {
  if (universe_->scalar()) return -1;
  const int slot = grid_slot_[static_cast<std::size_t>(grid_idx)];
  if (slot < 0) return -1;
  const int s = static_cast<int>(rounded_->small_items.size());
  return rounded_->h_size() + s + static_cast<int>(window_rows_.size()) + slot;
}

std::vector<std::pair<int, double>> MasterLP::config_entries(
    int config_id, const std::optional<Window>& w) const {
  std::vector<std::pair<int, double>> entries;
  const Configuration& config = pool_->get(config_id);
  for (std::size_t v = 0; v < config.counts.size(); ++v) {
    if (config.counts[v] > 0) {
      entries.emplace_back(coverage_row(static_cast<int>(v)),
                           static_cast<double>(config.counts[v]));
    }
  }
  if (w.has_value() && universe_->enabled()) {
    const int g = universe_->grid_index(*w);
    const int srow = size_row(g);
    if (srow < 0) {
      throw InternalInvariantViolation("configuration column on a rowless window");
    }
    entries.emplace_back(srow, to_double(universe_->window_size(w->t)));
    const int crow = count_row(g);
    if (crow >= 0) entries.emplace_back(crow, static_cast<double>(*w->count));
  }
  return entries;
}

bool MasterLP::add_config_column(int config_id, const std::optional<Window>& window) {
  int grid = -1;
  if (window.has_value()) {
    const Configuration& c = pool_->get(config_id);
    if (!universe_->is_valid_generalized(c.total_size, c.total_items, *window)) {
      throw InternalInvariantViolation("attempt to pool an invalid generalized configuration");
    }
    grid = universe_->grid_index(*window);
  }
  const auto key = std::make_pair(config_id, grid);
  if (config_cols_.count(key) > 0) return false;
  const int col = lp_->add_column(1.0, config_entries(config_id, window));
  Tag tag;
  tag.kind = Tag::kConfig;
  tag.config_id = config_id;
  tag.grid = grid;
  tags_.push_back(tag);
  config_cols_[key] = col;
  return true;
}

int MasterLP::add_y_column(int small_idx, int grid_idx) {
  const auto key = std::make_pair(small_idx, grid_idx);
  auto it = y_cols_.find(key);
  if (it != y_cols_.end()) return it->second;
  const Item& item = rounded_->small_items[static_cast<std::size_t>(small_idx)];
  std::vector<std::pair<int, double>> entries;
  entries.emplace_back(small_row(small_idx), 1.0);
  const int srow = size_row(grid_idx);
  if (srow < 0) throw InternalInvariantViolation("Y column on a rowless window");
  if (item.size > 0) entries.emplace_back(srow, -to_double(item.size));
  const int crow = count_row(grid_idx);
  if (crow >= 0) entries.emplace_back(crow, -1.0);
  const int col = lp_->add_column(0.0, std::move(entries));
  Tag tag;
  tag.kind = Tag::kY;
  tag.small = small_idx;
  tag.grid = grid_idx;
  tags_.push_back(tag);
  y_cols_[key] = col;
  return col;
}

void MasterLP::seed() {
  if (seeded_) return;
  seeded_ = true;
  const int h = rounded_->h_size();
  const bool bpr = rounded_->problem == Problem::kBpr;
  const bool enabled = universe_->enabled();
  const int s = enabled ? static_cast<int>(rounded_->small_items.size()) : 0;

  if (reduced_mode_) {
    // Every pooled configuration against every compatible carried window,
    // all Y columns, all rejection columns; then a phase-1 start.
    for (int id = 0; id < pool_->size(); ++id) {
      const Configuration& c = pool_->get(id);
      for (int g : window_rows_) {
        const Window w = universe_->grid_window(g);
        if (universe_->is_valid_generalized(c.total_size, c.total_items, w)) {
          add_config_column(id, w);
        }
      }
    }
    for (int i = 0; i < s; ++i) {
      for (int g : window_rows_) add_y_column(i, g);
    }
    if (bpr) {
      for (int i = 0; i < s; ++i) {
        const Item& item = rounded_->small_items[static_cast<std::size_t>(i)];
        const int col = lp_->add_column(to_double(*item.penalty), {{small_row(i), 1.0}});
        Tag tag;
        tag.kind = Tag::kZSmall;
        tag.small = i;
        tags_.push_back(tag);
        (void)col;
      }
      for (int v = 0; v < h; ++v) {
        const auto& type = rounded_->item_types[static_cast<std::size_t>(v)];
        const int col = lp_->add_column(to_double(*type.penalty), {{coverage_row(v), 1.0}});
        Tag tag;
        tag.kind = Tag::kZType;
        tag.type = v;
        tags_.push_back(tag);
        (void)col;
      }
    }
    lp_->phase1();
    return;
  }

  // Full mode: singletons, the empty configuration, seed Y columns, and (BPR)
  // rejection columns; the crash basis below is feasible by construction.
  std::vector<int> basis(static_cast<std::size_t>(lp_->rows()), -1);
  for (int v = 0; v < h; ++v) {
    std::vector<int> counts(static_cast<std::size_t>(h), 0);
    counts[static_cast<std::size_t>(v)] = 1;
    const int config_id = pool_->intern(counts);
    std::optional<Window> w;
    if (enabled) {
      const Configuration& c = pool_->get(config_id);
      w = universe_->main_window(c.total_size, c.total_items);
    }
    add_config_column(config_id, w);
    basis[static_cast<std::size_t>(coverage_row(v))] =
        config_cols_.at({config_id, w ? universe_->grid_index(*w) : -1});
  }

  if (enabled) {
    const int empty_id = pool_->intern_empty();
    const Window top = universe_->grid_window(0);  // (size 1, count k)
    add_config_column(empty_id, top);
    const int empty_col = config_cols_.at({empty_id, 0});

    Rational small_mass(0);
    for (int i = 0; i < s; ++i) {
      add_y_column(i, 0);
      basis[static_cast<std::size_t>(small_row(i))] = y_cols_.at({i, 0});
      small_mass += rounded_->small_items[static_cast<std::size_t>(i)].size;
    }
    // The empty column hosts whichever seed row binds; slacks host the rest.
    bool on_size_row = true;
    if (!universe_->scalar()) {
      // size row needs x >= small_mass, count row needs k x >= |S|.
      on_size_row = small_mass * Rational(universe_->k()) >= Rational(s);
    }
    basis[static_cast<std::size_t>(on_size_row ? size_row(0) : count_row(0))] = empty_col;
    for (int r = 0; r < lp_->rows(); ++r) {
      if (basis[static_cast<std::size_t>(r)] < 0) basis[static_cast<std::size_t>(r)] = r;  // slack
    }
  } else {
    for (int r = 0; r < lp_->rows(); ++r) {
      if (basis[static_cast<std::size_t>(r)] < 0) basis[static_cast<std::size_t>(r)] = r;
    }
  }

  if (bpr) {
    for (int i = 0; i < s; ++i) {
      const Item& item = rounded_->small_items[static_cast<std::size_t>(i)];
      lp_->add_column(to_double(*item.penalty), {{small_row(i), 1.0}});
      Tag tag;
      tag.kind = Tag::kZSmall;
      tag.small = i;
      tags_.push_back(tag);
    }
    for (int v = 0; v < h; ++v) {
      const auto& type = rounded_->item_types[static_cast<std::size_t>(v)];
      lp_->add_column(to_double(*type.penalty), {{coverage_row(v), 1.0}});
      Tag tag;
      tag.kind = Tag::kZType;
      tag.type = v;
      tags_.push_back(tag);
    }
  }

  if (lp_->rows() > 0) lp_->set_basis(basis);
}

void MasterLP::solve() {
  if (!seeded_) throw InternalInvariantViolation("solve() before seed()");
  if (lp_->rows() == 0) return;
  lp_->optimize();
}

double MasterLP::objective() const { return lp_->rows() == 0 ? 0.0 : lp_->objective(); }

FractionalSolution MasterLP::solution() const {
  FractionalSolution sol;
  const int s = universe_->enabled() ? static_cast<int>(rounded_->small_items.size()) : 0;
  sol.y.resize(static_cast<std::size_t>(s));
  sol.z_small.assign(static_cast<std::size_t>(s), 0.0);
  sol.z_type.assign(static_cast<std::size_t>(rounded_->h_size()), 0.0);
  sol.is_basic = true;
  sol.objective = objective();
  if (lp_->rows() == 0) return sol;

  for (const auto& [key, col] : config_cols_) {
    const double v = lp_->primal_value(col);
    if (v <= 1e-11) continue;
    GeneralizedConfiguration gc;
    gc.config_id = key.first;
    if (key.second >= 0) gc.window = universe_->grid_window(key.second);
    sol.x.emplace_back(gc, v);
  }
  for (const auto& [key, col] : y_cols_) {
    const double v = lp_->primal_value(col);
    if (v <= 1e-11) continue;
    sol.y[static_cast<std::size_t>(key.first)].emplace_back(key.second, v);
  }
  for (std::size_t col = 0; col < tags_.size(); ++col) {
    const Tag& tag = tags_[col];
    if (tag.kind == Tag::kZSmall) {
      sol.z_small[static_cast<std::size_t>(tag.small)] =
          lp_->primal_value(static_cast<int>(col));
    } else if (tag.kind == Tag::kZType) {
      sol.z_type[static_cast<std::size_t>(tag.type)] =
          lp_->primal_value(static_cast<int>(col));
    }
  }
  return sol;
}

DualPrices MasterLP::duals() const {
  DualPrices d;
  const int h = rounded_->h_size();
  const int s = universe_->enabled() ? static_cast<int>(rounded_->small_items.size()) : 0;
  d.alpha.assign(static_cast<std::size_t>(h), 0.0);
  d.beta.assign(static_cast<std::size_t>(s), 0.0);
  const int grid = universe_->enabled() ? universe_->grid_size() : 0;
  d.gamma.assign(static_cast<std::size_t>(grid), 0.0);
  if (universe_->enabled() && !universe_->scalar()) {
    d.delta.assign(static_cast<std::size_t>(grid), 0.0);
  }
  if (lp_->rows() == 0) return d;

  const auto& y = lp_->duals();
  for (int v = 0; v < h; ++v) {
    d.alpha[static_cast<std::size_t>(v)] = std::max(0.0, y[static_cast<std::size_t>(coverage_row(v))]);
  }
  for (int i = 0; i < s; ++i) {
    d.beta[static_cast<std::size_t>(i)] = std::max(0.0, y[static_cast<std::size_t>(small_row(i))]);
  }
  for (int g = 0; g < grid; ++g) {
    const int srow = size_row(g);
    if (srow >= 0) {
      d.gamma[static_cast<std::size_t>(g)] = std::max(0.0, y[static_cast<std::size_t>(srow)]);
    }
    const int crow = count_row(g);
    if (crow >= 0) {
      d.delta[static_cast<std::size_t>(g)] = std::max(0.0, y[static_cast<std::size_t>(crow)]);
    }
  }
  return d;
}

int MasterLP::price_and_add_y(const DualPrices& duals) {
  if (!universe_->enabled()) return 0;
  const double margin = options_.violation_margin;
  int added = 0;
  const int s = static_cast<int>(rounded_->small_items.size());
  for (int i = 0; i < s; ++i) {
    const double beta = duals.beta[static_cast<std::size_t>(i)];
    if (beta <= margin) continue;
    const double size = to_double(rounded_->small_items[static_cast<std::size_t>(i)].size);
    for (int g : window_rows_) {
      const double gamma = duals.gamma[static_cast<std::size_t>(g)];
      const double delta = duals.delta.empty() ? 0.0 : duals.delta[static_cast<std::size_t>(g)];
      if (beta - size * gamma - delta > margin) {
        if (y_cols_.count({i, g}) == 0) {
          add_y_column(i, g);
          ++added;
        }
      }
    }
  }
  return added;
}

void MasterLP::write_lp(std::ostream& os) const {
  os << "\\ restricted master, " << lp_->rows() << " rows, " << lp_->num_columns()
     << " columns\nMinimize\n obj:";
  bool first = true;
  for (int col = 0; col < lp_->num_columns(); ++col) {
    const double c = lp_->column_cost(col);
    if (c == 0.0) continue;
    os << (first ? " " : " + ") << c << " x" << col;
    first = false;
  }
  if (first) os << " 0 x0";
  os << "\nSubject To\n";
  // Rebuild rows from the sparse columns.
  std::vector<std::vector<std::pair<int, double>>> rows(
      static_cast<std::size_t>(lp_->rows()));
  for (int col = 0; col < lp_->num_columns(); ++col) {
    for (const auto& [r, v] : lp_->column_entries(col)) {
      rows[static_cast<std::size_t>(r)].emplace_back(col, v);
    }
  }
  for (int r = 0; r < lp_->rows(); ++r) {
    os << " r" << r << ":";
    for (const auto& [col, v] : rows[static_cast<std::size_t>(r)]) {
      os << (v >= 0 ? " + " : " - ") << std::fabs(v) << " x" << col;
    }
    // Surplus columns already encode the >= direction; rows are equalities.
    double rhs = 0.0;
    if (r < rounded_->h_size()) {
      rhs = rounded_->item_types[static_cast<std::size_t>(r)].multiplicity;
    } else if (universe_->enabled() &&
               r < rounded_->h_size() + static_cast<int>(rounded_->small_items.size())) {
      rhs = 1.0;
    }
    os << " = " << rhs << "\n";
  }
  os << "Bounds\nEnd\n";
}

std::vector<PricedColumn> price_violated_columns(const DualPrices& duals,
                                                 const WindowUniverse& universe,
                                                 const RoundedInstance& rounded,
                                                 double margin) {
  std::vector<PricedColumn> out;
  std::vector<PricingItem> items;
  for (std::size_t v = 0; v < rounded.item_types.size(); ++v) {
    const auto& type = rounded.item_types[v];
    PricingItem item;
    item.type_index = static_cast<int>(v);
    item.profit = duals.alpha[v];
    item.size = type.size;
    item.multiplicity = type.multiplicity;
    items.push_back(std::move(item));
  }
  // A quiet oracle at accuracy eps/(1+eps) certifies a*/(1+eps).
  const Rational eps = rounded.epsilon / (1 + rounded.epsilon);

  if (!universe.enabled()) {
    long total = 0;
    for (const auto& item : items) total += item.multiplicity;
    int axis = static_cast<int>(std::min<long>(total, 1 << 20));
    if (rounded.problem == Problem::kBpcc) axis = std::min(axis, rounded.k);
    KccSweep sweep(items, Rational(1), false, axis, eps);
    const double value = sweep.value(axis);
    if (value > 1.0 + margin) {
      PricedColumn cand;
      cand.counts = sweep.result(axis).counts;
      cand.value = value;
      cand.violation = value - 1.0;
      out.push_back(std::move(cand));
    }
    return out;
  }

  for (int t = 0; t <= universe.t_max(); ++t) {
    const bool smallest = t == universe.t_max();
    const Rational capacity = smallest ? Rational(1) : 1 - universe.window_size(t + 1);
    const bool strict = !smallest;
    if (universe.scalar()) {
      long total = 0;
      for (const auto& item : items) total += item.multiplicity;
      const int axis = static_cast<int>(std::min<long>(total, 1 << 20));
      KccSweep sweep(items, capacity, strict, axis, eps);
      const double value = sweep.value(axis);
      const Window w{t, std::nullopt};
      const int g = universe.grid_index(w);
      const double threshold =
          1.0 - to_double(universe.window_size(t)) * duals.gamma[static_cast<std::size_t>(g)];
      if (value > threshold + margin) {
        PricedColumn cand;
        cand.counts = sweep.result(axis).counts;
        cand.window = w;
        cand.value = value;
        cand.violation = value - threshold;
        out.push_back(std::move(cand));
      }
      continue;
    }

    KccSweep sweep(items, capacity, strict, universe.count_max(), eps);
    const double w_s = to_double(universe.window_size(t));
    int best_c = -1;
    double best_violation = margin;
    for (int c = 0; c <= universe.count_max(); ++c) {
      const Window w{t, universe.k() - c};
      const int g = universe.grid_index(w);
      const double threshold = 1.0 -
                               w_s * duals.gamma[static_cast<std::size_t>(g)] -
                               static_cast<double>(universe.k() - c) *
                                   duals.delta[static_cast<std::size_t>(g)];
      const double violation = sweep.value(c) - threshold;
      if (violation > best_violation) {
        best_violation = violation;
        best_c = c;
      }
    }
    if (best_c >= 0) {
      PricedColumn cand;
      cand.counts = sweep.result(best_c).counts;
      cand.window = Window{t, universe.k() - best_c};
      cand.value = sweep.value(best_c);
      cand.violation = best_violation;
      out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end(), [](const PricedColumn& a, const PricedColumn& b) {
    return a.violation > b.violation;
  });
  return out;
}

std::optional<GeneralizedConfiguration> price_all_windows(const DualPrices& duals,
                                                          const WindowUniverse& universe,
                                                          const RoundedInstance& rounded,
                                                          ConfigurationPool& pool,
                                                          double margin) {
  auto candidates = price_violated_columns(duals, universe, rounded, margin);
  if (candidates.empty()) return std::nullopt;
  GeneralizedConfiguration gc;
  gc.config_id = pool.intern(candidates.front().counts);
  if (candidates.front().window.has_value()) gc.window = *candidates.front().window;
  return gc;
}

CgResult column_generation(MasterLP& master) {
  master.seed();
  master.solve();

  const auto& universe = master.universe();
  const auto& rounded = master.rounded();
  const long grid = universe.enabled() ? universe.grid_size() : 0;
  const long small = universe.enabled() ? static_cast<long>(rounded.small_items.size()) : 0;
  long cap = master.options().iteration_cap;
  if (cap <= 0) cap = 50 + 10 * (rounded.h_size() + grid + small);

  CgResult result;
  double last_obj = master.objective();
  double max_increase = 0.0;
  for (long iter = 1;; ++iter) {
    const DualPrices d = master.duals();
    int added = master.price_and_add_y(d);
    auto candidates =
        price_violated_columns(d, universe, rounded, master.options().violation_margin);
    for (const auto& cand : candidates) {
      const int config_id = master.pool().intern(cand.counts);
      if (master.add_config_column(config_id, cand.window)) ++added;
    }
    if (added == 0) {
      result.iterations = iter - 1;
      break;
    }
    result.columns_generated += added;
    master.solve();
    const double obj = master.objective();
    max_increase = std::max(max_increase, obj - last_obj);
    last_obj = obj;
    log_debug("cg iter ", iter, ": obj=", obj, " added=", added);
    if (iter >= cap) {
      throw ConvergenceFailure("column generation hit the iteration cap (" +
                               std::to_string(cap) + "), objective " +
                               std::to_string(obj));
    }
  }

  if (max_increase > 1e-6 * (1.0 + std::fabs(last_obj))) {
    throw InternalInvariantViolation("master objective increased by " +
                                     std::to_string(max_increase));
  }
  result.solution = master.solution();
  result.master_objective = master.objective();
  result.lower_bound = result.master_objective / to_double(1 + rounded.epsilon);
  return result;
}

double certificate_spot_check(const DualPrices& duals, const WindowUniverse& universe,
                              const RoundedInstance& rounded, int samples,
                              unsigned long seed) {
  std::mt19937_64 rng(seed);
  const double band = to_double(1 + rounded.epsilon);
  double worst = band;  // slack of the scaled-dual constraint, min over samples

  const int h = rounded.h_size();
  for (int it = 0; it < samples; ++it) {
    // Random feasible configuration by greedy random fill.
    std::vector<int> counts(static_cast<std::size_t>(h), 0);
    Rational size(0);
    int total = 0;
    double alpha_sum = 0.0;
    const int cap_items = universe.enabled() && !universe.scalar()
                              ? universe.count_max()
                              : (rounded.problem == Problem::kBpcc ? rounded.k : 64);
    const int tries = h == 0 ? 0 : static_cast<int>(rng() % (2 * cap_items + 1));
    for (int q = 0; q < tries && total < cap_items; ++q) {
      const int v = static_cast<int>(rng() % static_cast<unsigned long>(h));
      const auto& type = rounded.item_types[static_cast<std::size_t>(v)];
      if (counts[static_cast<std::size_t>(v)] >= type.multiplicity) continue;
      if (size + type.size > 1) continue;
      counts[static_cast<std::size_t>(v)] += 1;
      size += type.size;
      total += 1;
      alpha_sum += duals.alpha[static_cast<std::size_t>(v)];
    }

    double lhs = alpha_sum;
    if (universe.enabled()) {
      const Window main = universe.main_window(size, total);
      const int t = main.t + (main.t < universe.t_max()
                                  ? static_cast<int>(rng() % static_cast<unsigned long>(
                                                         universe.t_max() - main.t + 1))
                                  : 0);
      Window w{t, std::nullopt};
      int g;
      if (!universe.scalar()) {
        const int c_min = total;
        const int c = c_min + (c_min < universe.count_max()
                                   ? static_cast<int>(rng() % static_cast<unsigned long>(
                                                          universe.count_max() - c_min + 1))
                                   : 0);
        w.count = universe.k() - c;
        g = universe.grid_index(w);
        lhs += to_double(universe.window_size(t)) * duals.gamma[static_cast<std::size_t>(g)] +
               static_cast<double>(*w.count) * duals.delta[static_cast<std::size_t>(g)];
      } else {
        g = universe.grid_index(w);
        lhs += to_double(universe.window_size(t)) * duals.gamma[static_cast<std::size_t>(g)];
      }
    }
    worst = std::min(worst, band - lhs);
  }
  return worst;
}

std::vector<int> active_windows(const FractionalSolution& sol,
                                const WindowUniverse& universe,
                                const ConfigurationPool& pool) {
  std::set<int> grids;
  for (const auto& [gc, v] : sol.x) {
    if (v <= 1e-11) continue;
    const Configuration& c = pool.get(gc.config_id);
    const Window main = universe.main_window(c.total_size, c.total_items);
    grids.insert(universe.grid_index(main));
  }
  return std::vector<int>(grids.begin(), grids.end());
}

FractionalSolution solve_reduced_on_windows(const RoundedInstance& rounded,
                                            const WindowUniverse& universe,
                                            ConfigurationPool& pool,
                                            const std::vector<int>& window_set,
                                            const SolverOptions& options) {
  MasterLP reduced(rounded, universe, pool, options, window_set);
  reduced.seed();
  reduced.solve();
  return reduced.solution();
}

}  // namespace afptas
