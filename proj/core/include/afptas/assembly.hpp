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

#ifndef AFPTAS_ASSEMBLY_HPP
#define AFPTAS_ASSEMBLY_HPP

#include <map>
#include <optional>
#include <vector>

#include "afptas/master.hpp"
#include "afptas/packing.hpp"

namespace afptas {

enum class Stage { kLarge, kInter, kFinal };

// A bin under construction, tagged with where it came from. Config bins
// carry their generalized configuration as provenance.
struct BinDraft {
  enum Kind {
    kConfig,
    kDedicated,      // one evicted fractional-Y small item
    kRemovalGroup,   // largest-removed small items, 1/eps per bin
    kOverflowGroup,  // first non-fitting repack items, 1/eps per bin
    kLeftoverGroup,  // post-repack leftovers of 1/eps bins
    kSetAside,       // one L1 item
    kZeroSpread,     // zero-size items on the degenerate path
    kPrebuilt        // the BPR zero-size pre-built bin
  };
  Kind kind = kConfig;
  int config_id = -1;
  std::optional<Window> window;
  std::vector<int> large_ids;
  std::vector<int> small_ids;   // ids, not small indices
};

struct StagedSolution {
  Stage stage = Stage::kLarge;
  std::vector<BinDraft> bins;
  std::vector<int> rejected;    // item ids (BPR)
};

// Structural-lemma observations recorded while assembling; the acceptance
// suite asserts them on every solved instance.
struct LemmaDiagnostics {
  bool migration_checked = false;
  double migration_x_error = 0.0;       // |sum x| drift
  double migration_config_error = 0.0;  // max per-configuration drift
  double migration_y_error = 0.0;       // max per-item sum-Y drift

  long fractional_x = 0;
  long fractional_small = 0;  // items with a fractional Y/z vector
  long h_size = 0;
  long w_prime = 0;
  bool support_bound_ok = true;

  long ceil_increase = 0;     // sum ceil(x) - #positive-x... integral bump count
  bool roundup_ok = true;

  bool balance_checked = false;
  bool balance_ok = true;     // per-bin small mass <= S(W)/X(W) after removal

  bool leftover_ok = true;    // size <= eps w_s/(1+eps), count <= eps w_n

  double certificate_slack = 0.0;  // worst scaled-dual slack (>= 0 means ok)
  bool certificate_ok = true;
};

// Moves every x/Y unit supported on a non-active window onto the main window
// of its configuration (proportional Y split); objective and all per-item
// totals are preserved. Returns the migrated point and records drift.
struct MigrationResult {
  FractionalSolution solution;
  std::vector<int> window_set;  // W' as grid indices
};
MigrationResult migrate_to_active_windows(const FractionalSolution& sol,
                                          const WindowUniverse& universe,
                                          ConfigurationPool& pool,
                                          LemmaDiagnostics& diag);

// Integral side of the rounding: ceil x, classify small items into window
// assignments / evicted (fractional Y) / rejected (BPR), and reject the
// uncovered tail of each large type (BPR). Exact integer-side window bounds
// are re-established by eviction if the float solution drifted.
struct IntegralAssignment {
  std::map<std::pair<int, int>, long> x_hat;        // (config, grid|-1) -> copies
  std::map<int, std::vector<int>> window_smalls;    // grid -> small indices, size desc
  std::vector<int> evicted;                         // small indices
  std::vector<int> rejected_small;                  // small indices (BPR)
  std::map<int, long> rejected_large;               // type -> count (BPR)
};
IntegralAssignment round_up_and_evict(const FractionalSolution& sol,
                                      const RoundedInstance& rounded,
                                      const WindowUniverse& universe,
                                      ConfigurationPool& pool,
                                      LemmaDiagnostics& diag);

// Builds the bins, assigns the concrete large items, round-robins each
// window's small items over its bins sorted by size, removes the largest
// small item of every loaded bin (zero windows keep all-zero loads), and
// groups the removed items (or rejects them, BPR) -> SOL_inter.
StagedSolution place_small_items(const IntegralAssignment& assignment,
                                 const RoundedInstance& rounded,
                                 const WindowUniverse& universe,
                                 const ConfigurationPool& pool,
                                 const Instance& instance,
                                 LemmaDiagnostics& diag);

// Greedy re-insertion per bin in non-decreasing size order, first overflow
// items grouped 1/eps per bin (or rejected, BPR), leftovers of 1/eps bins
// merged into one bin each -> SOL_final.
StagedSolution repack_final(StagedSolution inter, const RoundedInstance& rounded,
                            const WindowUniverse& universe, const Instance& instance,
                            LemmaDiagnostics& diag);

// One bin per set-aside item; items keep their original (unrounded) sizes.
void attach_set_aside(StagedSolution& staged, const RoundedInstance& rounded);

// Degenerate-path zero-size items: fill free cardinality slots, then open
// bins of k zeros each.
void spread_zero_items(StagedSolution& staged, const RoundedInstance& rounded);

// Drops empty bins and produces the final exact-cost packing.
Packing finalize_packing(const StagedSolution& staged, const Instance& instance);

}  // namespace afptas

#endif  // AFPTAS_ASSEMBLY_HPP
