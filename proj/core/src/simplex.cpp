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

#include "afptas/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "afptas/errors.hpp"

namespace afptas {

namespace {
constexpr double kPivotTol = 1e-9;
constexpr double kReducedTol = 1e-9;
constexpr double kSingularTol = 1e-11;
constexpr long kStallLimit = 50;
constexpr long kRefactorEvery = 400;
constexpr long kMaxPivots = 2000000;
}  // namespace

DenseSimplex::DenseSimplex(std::vector<double> rhs) : rhs_(std::move(rhs)) {}

int DenseSimplex::add_column(double cost, std::vector<std::pair<int, double>> entries) {
  Column col;
  col.cost = cost;
  col.entries = std::move(entries);
  cols_.push_back(std::move(col));
  col_state_.push_back(-1);
  return static_cast<int>(cols_.size()) - 1;
}

double DenseSimplex::effective_cost(int col, bool phase1_costs) const {
  const Column& c = cols_[static_cast<std::size_t>(col)];
  if (phase1_costs) return c.artificial ? 1.0 : 0.0;
  return c.cost;
}

void DenseSimplex::set_basis(const std::vector<int>& basis) {
  const int m = rows();
  if (static_cast<int>(basis.size()) != m) {
    throw InternalInvariantViolation("basis size does not match row count");
  }
  std::fill(col_state_.begin(), col_state_.end(), -1);
  basis_ = basis;
  for (int r = 0; r < m; ++r) col_state_[static_cast<std::size_t>(basis_[r])] = r;
  factorize();
  x_basic_.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    const double* row = binv_.data() + static_cast<std::size_t>(i) * m;
    for (int j = 0; j < m; ++j) s += row[j] * rhs_[static_cast<std::size_t>(j)];
    x_basic_[static_cast<std::size_t>(i)] = s;
  }
  phase1_active_ = false;
  bland_ = false;
  stalled_ = 0;
}

void DenseSimplex::factorize() {
  const int m = rows();
  // Gauss-Jordan inversion with partial pivoting of the basis matrix.
  std::vector<double> work(static_cast<std::size_t>(m) * m, 0.0);
  for (int r = 0; r < m; ++r) {
    const Column& col = cols_[static_cast<std::size_t>(basis_[r])];
    for (const auto& [row, val] : col.entries) {
      work[static_cast<std::size_t>(row) * m + r] = val;
    }
  }
  binv_.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) binv_[static_cast<std::size_t>(i) * m + i] = 1.0;

  for (int c = 0; c < m; ++c) {
    int pivot = -1;
    double best = kSingularTol;
    for (int r = c; r < m; ++r) {
      const double v = std::fabs(work[static_cast<std::size_t>(r) * m + c]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (pivot < 0) {
      throw NumericalInstability("singular basis during refactorization (column " +
                                 std::to_string(c) + ", |pivot| <= " +
                                 std::to_string(kSingularTol) + ")");
    }
    if (pivot != c) {
      for (int j = 0; j < m; ++j) {
        std::swap(work[static_cast<std::size_t>(pivot) * m + j],
                  work[static_cast<std::size_t>(c) * m + j]);
        std::swap(binv_[static_cast<std::size_t>(pivot) * m + j],
                  binv_[static_cast<std::size_t>(c) * m + j]);
      }
    }
    const double inv = 1.0 / work[static_cast<std::size_t>(c) * m + c];
    for (int j = 0; j < m; ++j) {
      work[static_cast<std::size_t>(c) * m + j] *= inv;
      binv_[static_cast<std::size_t>(c) * m + j] *= inv;
    }
    for (int r = 0; r < m; ++r) {
      if (r == c) continue;
      const double f = work[static_cast<std::size_t>(r) * m + c];
      if (f == 0.0) continue;
      for (int j = 0; j < m; ++j) {
        work[static_cast<std::size_t>(r) * m + j] -=
            f * work[static_cast<std::size_t>(c) * m + j];
        binv_[static_cast<std::size_t>(r) * m + j] -=
            f * binv_[static_cast<std::size_t>(c) * m + j];
      }
    }
  }
  factorized_ = true;
  pivots_since_factor_ = 0;
}

void DenseSimplex::compute_duals(bool phase1_costs) {
  const int m = rows();
  duals_.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < m; ++i) {
    const double cb = effective_cost(basis_[i], phase1_costs);
    if (cb == 0.0) continue;
    const double* row = binv_.data() + static_cast<std::size_t>(i) * m;
    for (int j = 0; j < m; ++j) duals_[static_cast<std::size_t>(j)] += cb * row[j];
  }
}

double DenseSimplex::reduced_cost(int col, bool phase1_costs) const {
  const Column& c = cols_[static_cast<std::size_t>(col)];
  double rc = phase1_costs ? (c.artificial ? 1.0 : 0.0) : c.cost;
  for (const auto& [row, val] : c.entries) {
    rc -= duals_[static_cast<std::size_t>(row)] * val;
  }
  return rc;
}

void DenseSimplex::ftran(const std::vector<std::pair<int, double>>& entries,
                         std::vector<double>& out) const {
  const int m = rows();
  out.assign(static_cast<std::size_t>(m), 0.0);
  for (const auto& [row, val] : entries) {
    const double* base = binv_.data() + row;
    for (int i = 0; i < m; ++i) {
      out[static_cast<std::size_t>(i)] += base[static_cast<std::size_t>(i) * m] * val;
    }
  }
}

void DenseSimplex::apply_pivot(int leaving, int entering,
                               const std::vector<double>& direction, double theta) {
  const int m = rows();
  const double piv = direction[static_cast<std::size_t>(leaving)];
  for (int r = 0; r < m; ++r) {
    if (r == leaving) continue;
    x_basic_[static_cast<std::size_t>(r)] -= theta * direction[static_cast<std::size_t>(r)];
    if (x_basic_[static_cast<std::size_t>(r)] < 0.0 &&
        x_basic_[static_cast<std::size_t>(r)] > -1e-10) {
      x_basic_[static_cast<std::size_t>(r)] = 0.0;
    }
  }
  x_basic_[static_cast<std::size_t>(leaving)] = theta;

  double* lrow = binv_.data() + static_cast<std::size_t>(leaving) * m;
  const double inv_piv = 1.0 / piv;
  for (int j = 0; j < m; ++j) lrow[j] *= inv_piv;
  for (int r = 0; r < m; ++r) {
    if (r == leaving) continue;
    const double f = direction[static_cast<std::size_t>(r)];
    if (f == 0.0) continue;
    double* row = binv_.data() + static_cast<std::size_t>(r) * m;
    for (int j = 0; j < m; ++j) row[j] -= f * lrow[j];
  }

  col_state_[static_cast<std::size_t>(basis_[leaving])] = -1;
  basis_[static_cast<std::size_t>(leaving)] = entering;
  col_state_[static_cast<std::size_t>(entering)] = leaving;

  ++pivots_;
  ++pivots_since_factor_;
  if (pivots_since_factor_ >= kRefactorEvery) {
    factorize();
    refine();
  }
}

bool DenseSimplex::iterate(bool phase1_costs) {
  const int m = rows();
  compute_duals(phase1_costs);

  int entering = -1;
  double best_rc = -kReducedTol;
  for (int col = 0; col < num_columns(); ++col) {
    if (col_state_[static_cast<std::size_t>(col)] >= 0) continue;
    if (!phase1_costs && cols_[static_cast<std::size_t>(col)].artificial) continue;
    const double rc = reduced_cost(col, phase1_costs);
    if (bland_) {
      if (rc < -kReducedTol) {
        entering = col;
        break;
      }
    } else if (rc < best_rc) {
      best_rc = rc;
      entering = col;
    }
  }
  if (entering < 0) return false;

  std::vector<double> direction;
  ftran(cols_[static_cast<std::size_t>(entering)].entries, direction);

  int leaving = -1;
  double theta = std::numeric_limits<double>::infinity();
  for (int r = 0; r < m; ++r) {
    const double d = direction[static_cast<std::size_t>(r)];
    if (d <= kPivotTol) continue;
    const double ratio = std::max(0.0, x_basic_[static_cast<std::size_t>(r)]) / d;
    bool better = false;
    if (ratio < theta - 1e-12) {
      better = true;
    } else if (ratio < theta + 1e-12 && leaving >= 0) {
      better = bland_ ? basis_[r] < basis_[leaving]
                      : d > std::fabs(direction[static_cast<std::size_t>(leaving)]);
    }
    if (better) {
      theta = ratio;
      leaving = r;
    }
  }
  if (leaving < 0) {
    throw NumericalInstability("unbounded direction in the master LP (column " +
                               std::to_string(entering) + ")");
  }
  apply_pivot(leaving, entering, direction, theta);
  return true;
}

void DenseSimplex::optimize() {
  if (!factorized_) {
    throw InternalInvariantViolation("optimize() before a basis was installed");
  }
  const bool phase1_costs = phase1_active_;
  last_objective_ = objective();
  while (iterate(phase1_costs)) {
    if (pivots_ > kMaxPivots) {
      throw NumericalInstability("pivot limit exceeded (" + std::to_string(pivots_) + ")");
    }
    const double obj = objective();
    if (obj > last_objective_ - 1e-12 * (1.0 + std::fabs(last_objective_))) {
      ++stalled_;
      if (stalled_ >= kStallLimit) bland_ = true;
    } else {
      stalled_ = 0;
      bland_ = false;
    }
    last_objective_ = obj;
  }
  refine();
  compute_duals(phase1_costs);
}

void DenseSimplex::phase1() {
  const int m = rows();
  std::vector<int> art_basis;
  art_basis.reserve(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    if (rhs_[static_cast<std::size_t>(r)] < 0) {
      throw InternalInvariantViolation("phase1 requires nonnegative rhs");
    }
    const int id = add_column(0.0, {{r, 1.0}});
    cols_[static_cast<std::size_t>(id)].artificial = true;
    art_basis.push_back(id);
  }
  set_basis(art_basis);
  phase1_active_ = true;
  optimize();
  phase1_active_ = false;
  if (last_objective_ > 1e-6) {
    throw InternalInvariantViolation("restricted master unexpectedly infeasible (phase1 " +
                                     std::to_string(last_objective_) + ")");
  }
  drive_out_artificials();
  bland_ = false;
  stalled_ = 0;
}

void DenseSimplex::drive_out_artificials() {
  const int m = rows();
  std::vector<double> direction;
  for (int r = 0; r < m; ++r) {
    if (!cols_[static_cast<std::size_t>(basis_[r])].artificial) continue;
    // Degenerate swap: the artificial sits at ~0, any column with a nonzero
    // component in this row can take its place.
    for (int col = 0; col < num_columns(); ++col) {
      if (cols_[static_cast<std::size_t>(col)].artificial) continue;
      if (col_state_[static_cast<std::size_t>(col)] >= 0) continue;
      ftran(cols_[static_cast<std::size_t>(col)].entries, direction);
      if (std::fabs(direction[static_cast<std::size_t>(r)]) <= 1e-7) continue;
      apply_pivot(r, col, direction, 0.0);
      break;
    }
  }
}

double DenseSimplex::objective() const {
  double obj = 0.0;
  for (int r = 0; r < rows(); ++r) {
    const double c = phase1_active_
                         ? (cols_[static_cast<std::size_t>(basis_[r])].artificial ? 1.0 : 0.0)
                         : cols_[static_cast<std::size_t>(basis_[r])].cost;
    obj += c * x_basic_[static_cast<std::size_t>(r)];
  }
  return obj;
}

double DenseSimplex::primal_value(int col) const {
  const int state = col_state_[static_cast<std::size_t>(col)];
  return state < 0 ? 0.0 : x_basic_[static_cast<std::size_t>(state)];
}

std::vector<std::pair<int, double>> DenseSimplex::support() const {
  std::vector<std::pair<int, double>> out;
  for (int r = 0; r < rows(); ++r) {
    if (cols_[static_cast<std::size_t>(basis_[r])].artificial) continue;
    if (x_basic_[static_cast<std::size_t>(r)] > 0.0) {
      out.emplace_back(basis_[r], x_basic_[static_cast<std::size_t>(r)]);
    }
  }
  return out;
}

void DenseSimplex::refine() {
  const int m = rows();
  std::vector<double> residual = rhs_;
  for (int r = 0; r < m; ++r) {
    const double xb = x_basic_[static_cast<std::size_t>(r)];
    if (xb == 0.0) continue;
    for (const auto& [row, val] : cols_[static_cast<std::size_t>(basis_[r])].entries) {
      residual[static_cast<std::size_t>(row)] -= val * xb;
    }
  }
  double norm = 0.0;
  for (double v : residual) norm = std::max(norm, std::fabs(v));
  if (norm == 0.0) return;
  if (norm > 1e-6) factorize();
  for (int i = 0; i < m; ++i) {
    double s = 0.0;
    const double* row = binv_.data() + static_cast<std::size_t>(i) * m;
    for (int j = 0; j < m; ++j) s += row[j] * residual[static_cast<std::size_t>(j)];
    x_basic_[static_cast<std::size_t>(i)] += s;
    if (x_basic_[static_cast<std::size_t>(i)] < 0.0 &&
        x_basic_[static_cast<std::size_t>(i)] > -1e-9) {
      x_basic_[static_cast<std::size_t>(i)] = 0.0;
    }
  }
}

}  // namespace afptas
