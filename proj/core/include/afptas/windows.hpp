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

#ifndef AFPTAS_WINDOWS_HPP
#define AFPTAS_WINDOWS_HPP

#include <optional>
#include <vector>

#include "afptas/rounding.hpp"

namespace afptas {

// A window is reserved capacity for small items in a bin: a size from the
// (1+eps)-power grid, and for BPCC a residual item count. Windows are indexed
// by the integer exponent t (size (1+eps)^-t), never by floating sizes.
struct Window {
  int t = 0;
  std::optional<int> count;  // w_n, absent for BPR (scalar windows)

  friend bool operator==(const Window& a, const Window& b) {
    return a.t == b.t && a.count == b.count;
  }
};

// The virtual window set W plus everything needed to enumerate the master's
// window-row grid without materializing (k+1) * (t_max+1) entries.
//
// Grid exponents run t = 0..t_max where t_max = t0 + 1 and (1+eps)^-t0 is the
// largest grid size not exceeding the minimum nonzero small size. The count
// component of a main window is always k - |C| with |C| <= count_max, so the
// master only carries rows for counts in {k - c : c = 0..count_max}; windows
// with smaller counts are dominated by the c = count_max row.
class WindowUniverse {
 public:
  // Builds the universe for the given rounded instance. Disabled when there
  // is no nonzero small item (the degenerate no-window path).
  static WindowUniverse build(const RoundedInstance& rounded);

  bool enabled() const { return enabled_; }
  bool scalar() const { return scalar_; }
  int k() const { return k_; }
  int t_max() const { return t_max_; }
  int count_max() const { return count_max_; }
  const Rational& s_min() const { return s_min_; }
  const Rational& s_prime_min() const { return s_prime_min_; }
  const Rational& one_plus_eps() const { return one_plus_eps_; }

  // Exact (1+eps)^-t; valid for t in [0, t_max+1].
  const Rational& window_size(int t) const;

  // The smallest window leaves space only for zero-size items.
  bool is_zero_window(const Window& w) const { return w.t == t_max_; }

  // Number of count values carried per exponent in the master grid.
  int grid_counts() const { return scalar_ ? 1 : count_max_ + 1; }
  int grid_size() const { return (t_max_ + 1) * grid_counts(); }

  // Grid index <-> window. Grid cell (t, c) is window (t, k - c).
  int grid_index(const Window& w) const;
  Window grid_window(int index) const;

  // Main window of a configuration with rounded size total `s_prime` holding
  // `item_count` items: the largest grid size whose addition still reaches 1,
  // paired with the residual count k - item_count for BPCC.
  Window main_window(const Rational& s_prime, int item_count) const;

  // w <= main window of the configuration, componentwise.
  bool is_valid_generalized(const Rational& s_prime, int item_count,
                            const Window& w) const;

 private:
  bool enabled_ = false;
  bool scalar_ = false;
  int k_ = 0;
  int t_max_ = 0;
  int count_max_ = 0;
  Rational s_min_;
  Rational s_prime_min_;
  Rational one_plus_eps_;
  std::vector<Rational> sizes_;  // sizes_[t] = (1+eps)^-t, t = 0..t_max+1
};

}  // namespace afptas

#endif  // AFPTAS_WINDOWS_HPP
