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

#ifndef AFPTAS_MASTER_HPP
#define AFPTAS_MASTER_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "afptas/configuration.hpp"
#include "afptas/simplex.hpp"
#include "afptas/windows.hpp"

namespace afptas {

struct SolverOptions {
  double violation_margin = 1e-9;  // reduced-cost margin for pricing
  double row_tolerance = 1e-7;     // LP row feasibility tolerance
  long iteration_cap = 0;          // 0 = 50 + 10*(|H| + grid + |S|)
  std::string dump_lp_path;        // when set, the final restricted LP is dumped here
};

// Dual prices of the restricted master. gamma/delta are indexed by the
// window grid; windows without columns simply carry the duals of their
// (vacuous) rows. Negative noise is clamped to zero.
struct DualPrices {
  std::vector<double> alpha;  // per item type
  std::vector<double> beta;   // per small item
  std::vector<double> gamma;  // per grid window (size rows)
  std::vector<double> delta;  // per grid window (count rows, BPCC only)
};

// Sparse primal point of the master/reduced LP.
struct FractionalSolution {
  std::vector<std::pair<GeneralizedConfiguration, double>> x;
  // Per small item: (grid window index, value) pairs.
  std::vector<std::vector<std::pair<int, double>>> y;
  std::vector<double> z_small;  // BPR, per small item
  std::vector<double> z_type;   // BPR, per item type
  double objective = 0.0;
  bool is_basic = false;

  double x_total() const;
  double y_total(int small_idx) const;
};

// A violated column candidate from the separation oracle.
struct PricedColumn {
  std::vector<int> counts;          // per type
  std::optional<Window> window;     // absent on the windowless paths
  double value = 0.0;               // sum of alpha weights
  double violation = 0.0;           // value - (1 - w_s gamma - w_n delta)
};

// Restricted master: coverage rows per type, one row per small item, and
// size/count rows for every window of the grid. Columns are generated
// lazily: configuration columns by the knapsack oracles, Y columns by exact
// reduced-cost checks; rejection columns (BPR) are seeded up front.
class MasterLP {
 public:
  MasterLP(const RoundedInstance& rounded, const WindowUniverse& universe,
           ConfigurationPool& pool, SolverOptions options);

  // Reduced mode: rows only for the given grid windows; seed() then loads
  // every pooled column compatible with them and starts from phase 1.
  MasterLP(const RoundedInstance& rounded, const WindowUniverse& universe,
           ConfigurationPool& pool, SolverOptions options,
           std::vector<int> window_subset);

  // Initial columns: one singleton per type with its main window, the empty
  // configuration under the largest window, Y columns for every small item
  // against that window, and all rejection columns (BPR). Installs a
  // feasible starting basis; no phase-1 run is needed.
  void seed();

  // Re-optimizes the restricted LP (warm start across calls).
  void solve();

  double objective() const;
  FractionalSolution solution() const;
  DualPrices duals() const;

  // Adds a configuration column; returns false when already pooled.
  bool add_config_column(int config_id, const std::optional<Window>& window);
  // Adds every Y column whose exact reduced cost is violated; returns the
  // number added.
  int price_and_add_y(const DualPrices& duals);

  const RoundedInstance& rounded() const { return *rounded_; }
  const WindowUniverse& universe() const { return *universe_; }
  ConfigurationPool& pool() { return *pool_; }
  const SolverOptions& options() const { return options_; }

  // CPLEX-style LP text dump of the current restricted master.
  void write_lp(std::ostream& os) const;

  long rows() const;

 private:
  friend struct MasterAccess;
  struct Tag {
    enum Kind { kSlack, kConfig, kY, kZSmall, kZType } kind = kSlack;
    int config_id = -1;
    int grid = -1;  // grid window index, -1 = windowless
    int small = -1;
    int type = -1;
  };

  void init_rows();
  int coverage_row(int type) const;
  int small_row(int small_idx) const;
  int size_row(int grid_idx) const;   // -1 when the window carries no rows
  int count_row(int grid_idx) const;
  std::vector<std::pair<int, double>> config_entries(int config_id,
                                                     const std::optional<Window>& w) const;
  int add_y_column(int small_idx, int grid_idx);

  const RoundedInstance* rounded_;
  const WindowUniverse* universe_;
  ConfigurationPool* pool_;
  SolverOptions options_;

  bool reduced_mode_ = false;
  std::vector<int> window_rows_;      // grid indices carrying rows
  std::vector<int> grid_slot_;        // grid index -> slot in window_rows_ or -1

  std::unique_ptr<DenseSimplex> lp_;
  std::vector<Tag> tags_;
  std::map<std::pair<int, int>, int> config_cols_;  // (config, grid) -> col
  std::map<std::pair<int, int>, int> y_cols_;       // (small, grid) -> col
  bool seeded_ = false;
};

// Separation over the whole virtual window set: one cardinality sweep per
// window size (BPCC) or one knapsack per scalar window (BPR); windowless
// paths run a single sweep against capacity 1. Internally prices with
// accuracy eps/(1+eps) so that a quiet oracle certifies the dual point
// scaled by 1/(1+eps). Returns violated candidates sorted by violation,
// at most one per window size.
std::vector<PricedColumn> price_violated_columns(const DualPrices& duals,
                                                 const WindowUniverse& universe,
                                                 const RoundedInstance& rounded,
                                                 double margin);

// Spec-level wrapper: the single most violated generalized configuration,
// interned into the pool, or nullopt when the certificate holds.
std::optional<GeneralizedConfiguration> price_all_windows(const DualPrices& duals,
                                                          const WindowUniverse& universe,
                                                          const RoundedInstance& rounded,
                                                          ConfigurationPool& pool,
                                                          double margin = 1e-9);

struct CgResult {
  FractionalSolution solution;    // basic for the final restricted master
  double master_objective = 0.0;
  double lower_bound = 0.0;       // master_objective / (1+eps), certified
  long iterations = 0;
  long columns_generated = 0;
};

// Column generation to the (1+eps) certificate; throws ConvergenceFailure
// (carrying no solution) when the iteration cap is exceeded.
CgResult column_generation(MasterLP& master);

// Exact spot check of the scaled dual certificate on randomly sampled valid
// generalized configurations; returns the worst slack of
// (1+eps) - [sum alpha n(v,C) + w_s gamma + w_n delta] (negative = violated).
double certificate_spot_check(const DualPrices& duals, const WindowUniverse& universe,
                              const RoundedInstance& rounded, int samples,
                              unsigned long seed);

// Migration target set: grid indices of the main windows of every
// configuration in the support ("active windows").
std::vector<int> active_windows(const FractionalSolution& sol,
                                const WindowUniverse& universe,
                                const ConfigurationPool& pool);

// Re-solves the LP restricted to the active windows (rows and columns) and
// returns a basic optimal solution; its objective never exceeds the master's.
FractionalSolution solve_reduced_on_windows(const RoundedInstance& rounded,
                                            const WindowUniverse& universe,
                                            ConfigurationPool& pool,
                                            const std::vector<int>& window_set,
                                            const SolverOptions& options);

}  // namespace afptas

#endif  // AFPTAS_MASTER_HPP
