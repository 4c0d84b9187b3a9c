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

#include "afptas/windows.hpp"

#include <algorithm>

#include "afptas/errors.hpp"

namespace afptas {

WindowUniverse WindowUniverse::build(const RoundedInstance& rounded) {
  WindowUniverse u;
  u.scalar_ = rounded.problem == Problem::kBpr;
  u.k_ = rounded.k;
  u.one_plus_eps_ = 1 + rounded.epsilon;

  // Minimum nonzero small size; no such size means the degenerate path.
  bool found = false;
  for (const auto& item : rounded.small_items) {
    if (item.size > 0 && (!found || item.size < u.s_min_)) {
      u.s_min_ = item.size;
      found = true;
    }
  }
  if (!found) {
    u.enabled_ = false;
    return u;
  }
  u.enabled_ = true;

  // t0 = smallest exponent with (1+eps)^-t0 <= s_min; grid runs to t0 + 1.
  int t0 = 0;
  Rational size(1);
  const Rational inv = 1 / u.one_plus_eps_;
  while (size > u.s_min_) {
    size *= inv;
    ++t0;
  }
  u.s_prime_min_ = size;
  u.t_max_ = t0 + 1;

  u.sizes_.reserve(static_cast<std::size_t>(u.t_max_) + 2);
  Rational s(1);
  for (int t = 0; t <= u.t_max_ + 1; ++t) {
    u.sizes_.push_back(s);
    s *= inv;
  }

  if (u.scalar_) {
    u.count_max_ = 0;
  } else {
    // A configuration of large items (size >= eps each) holds at most
    // floor(1/eps) items, and never more than k.
    const long inv_eps = (1 / rounded.epsilon).get_num().get_si();
    u.count_max_ = static_cast<int>(std::min<long>(inv_eps, u.k_));
    if (rounded.item_types.empty()) u.count_max_ = 0;
  }
  return u;
}

const Rational& WindowUniverse::window_size(int t) const {
  if (t < 0 || t >= static_cast<int>(sizes_.size())) {
    throw InternalInvariantViolation("window exponent out of grid");
  }
  return sizes_[static_cast<std::size_t>(t)];
}

int WindowUniverse::grid_index(const Window& w) const {
  if (scalar_) return w.t;
  if (!w.count.has_value()) {
    throw InternalInvariantViolation("missing window count on the BPCC grid");
  }
  const int c = k_ - *w.count;
  if (c < 0 || c > count_max_ || w.t < 0 || w.t > t_max_) {
    throw InternalInvariantViolation("window outside the master grid");
  }
  return w.t * grid_counts() + c;
}

Window WindowUniverse::grid_window(int index) const {
  Window w;
  w.t = index / grid_counts();
  if (!scalar_) w.count = k_ - (index % grid_counts());
  return w;
}

Window WindowUniverse::main_window(const Rational& s_prime, int item_count) const {
  // Maximum t with s'(C) + (1+eps)^-t >= 1; t = 0 always qualifies.
  const Rational need = 1 - s_prime;
  int lo = 0, hi = t_max_;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (window_size(mid) >= need) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  Window w;
  w.t = lo;
  if (!scalar_) w.count = k_ - item_count;
  return w;
}

bool WindowUniverse::is_valid_generalized(const Rational& s_prime, int item_count,
                                          const Window& w) const {
  const Window main = main_window(s_prime, item_count);
  if (w.t < main.t) return false;  // larger size than the main window
  if (!scalar_) {
    if (!w.count.has_value()) return false;
    if (*w.count > *main.count || *w.count < 0) return false;
  }
  return true;
}

}  // namespace afptas
