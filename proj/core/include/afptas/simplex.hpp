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

#ifndef AFPTAS_SIMPLEX_HPP
#define AFPTAS_SIMPLEX_HPP

#include <utility>
#include <vector>

namespace afptas {

// Primal simplex over min c'x, A x = b, x >= 0 with columns stored sparse
// and a dense basis inverse. The restricted masters here carry surplus
// columns for every >= row, so equality form is what callers build.
//
// Vertex producer: optimize() leaves a basis whose basic solution is the
// reported primal point, so support sizes obey the basic-solution bound.
// Dantzig pricing with a Bland fallback after stalled pivots; the basis
// inverse is refreshed by refactorization when drift is detected.
class DenseSimplex {
 public:
  explicit DenseSimplex(std::vector<double> rhs);

  int rows() const { return static_cast<int>(rhs_.size()); }
  int num_columns() const { return static_cast<int>(cols_.size()); }

  // Columns may be added at any time; existing bases stay valid.
  int add_column(double cost, std::vector<std::pair<int, double>> entries);

  double column_cost(int col) const { return cols_[static_cast<std::size_t>(col)].cost; }
  const std::vector<std::pair<int, double>>& column_entries(int col) const {
    return cols_[static_cast<std::size_t>(col)].entries;
  }

  // Starts from a caller-provided feasible basis (one column per row).
  void set_basis(const std::vector<int>& basis);

  // Phase-1 start: appends one artificial per row (requires b >= 0), drives
  // their sum to zero, then excludes them from pricing. Throws
  // InternalInvariantViolation if the system is infeasible.
  void phase1();

  // Runs primal simplex to optimality over the current column pool.
  void optimize();

  double objective() const;
  const std::vector<double>& duals() const { return duals_; }
  const std::vector<int>& basis() const { return basis_; }
  bool in_basis(int col) const { return col_state_[static_cast<std::size_t>(col)] >= 0; }

  // Basic primal values; nonbasic columns are zero.
  double primal_value(int col) const;
  std::vector<std::pair<int, double>> support() const;

  // One step of iterative refinement on B x_B = b; tightens row residuals
  // before the integral rounding stages read the solution.
  void refine();

  long pivot_count() const { return pivots_; }

 private:
  struct Column {
    double cost;
    std::vector<std::pair<int, double>> entries;
    bool artificial = false;
  };

  void factorize();
  void compute_duals(bool phase1_costs);
  double reduced_cost(int col, bool phase1_costs) const;
  void ftran(const std::vector<std::pair<int, double>>& entries,
             std::vector<double>& out) const;
  void apply_pivot(int leaving, int entering, const std::vector<double>& direction,
                   double theta);
  bool iterate(bool phase1_costs);
  void drive_out_artificials();
  double effective_cost(int col, bool phase1_costs) const;

  std::vector<double> rhs_;
  std::vector<Column> cols_;
  std::vector<int> basis_;        // column id per row
  std::vector<int> col_state_;    // basis row or -1
  std::vector<double> x_basic_;
  std::vector<double> binv_;      // row-major m*m
  std::vector<double> duals_;
  bool factorized_ = false;
  bool phase1_active_ = false;
  long pivots_ = 0;
  long pivots_since_factor_ = 0;
  long stalled_ = 0;
  bool bland_ = false;
  double last_objective_ = 0.0;
};

}  // namespace afptas

#endif  // AFPTAS_SIMPLEX_HPP
