#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tvg/field.hpp"
#include "tvg/matrix.hpp"

namespace tvg {

enum class LpStatus { Feasible, Infeasible };

template <ExactField F>
struct FeasibilityResult {
  LpStatus status = LpStatus::Infeasible;
  /// Strictly positive entries of the basic feasible solution; other variables are 0.
  std::map<std::size_t, F> basic_solution;
  std::size_t support_size = 0;
  /// Number of equality rows left after exact rank reduction.
  std::size_t row_rank = 0;

  bool feasible() const noexcept { return status == LpStatus::Feasible; }
};

/// Decides {A x = b, x >= 0} exactly.
///
/// Rows are first reduced by Gauss-Jordan elimination (dependent rows dropped,
/// inconsistent ones reported as Infeasible), then phase-one simplex with
/// Bland's rule runs from the basis the reduction exposes, using artificial
/// variables only for rows whose right-hand side is negative.  A feasible
/// answer is a basic solution, so its support never exceeds the row rank.
template <ExactField F>
FeasibilityResult<F> lp_feasible(const Matrix<F>& equalities, const std::vector<F>& rhs);

}  // namespace tvg
