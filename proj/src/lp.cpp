#include "tvg/lp.hpp"

#include <limits>
#include <utility>

#include "tvg/error.hpp"

namespace tvg {

namespace {

constexpr std::size_t kArtificial = std::numeric_limits<std::size_t>::max();

template <ExactField F>
using Row = std::vector<F>;

// row_i -= factor * row_p, skipping structural zeros of row_p.
template <ExactField F>
void subtract_multiple(Row<F>& target, const Row<F>& source, const F& factor) {
  for (std::size_t j = 0; j < source.size(); ++j) {
    if (is_zero(source[j])) continue;
    target[j] -= factor * source[j];
  }
}

template <ExactField F>
void pivot(std::vector<Row<F>>& rows, Row<F>* objective, std::size_t p, std::size_t q) {
  const F inv = F(1) / rows[p][q];
  for (auto& v : rows[p]) {
    if (!is_zero(v)) v *= inv;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == p || is_zero(rows[i][q])) continue;
    const F factor = rows[i][q];
    subtract_multiple(rows[i], rows[p], factor);
  }
  if (objective != nullptr && !is_zero((*objective)[q])) {
    const F factor = (*objective)[q];
    subtract_multiple(*objective, rows[p], factor);
  }
}

}  // namespace

template <ExactField F>
FeasibilityResult<F> lp_feasible(const Matrix<F>& equalities, const std::vector<F>& rhs) {
  const std::size_t m = equalities.rows();
  const std::size_t n = equalities.cols();
  if (rhs.size() != m) {
    throw TvgError(Errc::DimensionMismatch, "rhs length differs from the number of equality rows");
  }

  // Tableau rows hold n coefficients followed by the right-hand side.
  std::vector<Row<F>> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Row<F> row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = equalities(i, j);
    row[n] = rhs[i];
    rows.push_back(std::move(row));
  }

  FeasibilityResult<F> result;

  // Exact rank reduction (Gauss-Jordan).
  std::vector<std::size_t> basis;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t col = 0;
    while (col < n && is_zero(rows[i][col])) ++col;
    if (col == n) {
      if (!is_zero(rows[i][n])) return result;  // 0 = nonzero
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    if (i != rank) std::swap(rows[i], rows[rank]);
    pivot<F>(rows, nullptr, rank, col);
    basis.push_back(col);
    ++rank;
    i = rank;
  }
  result.row_rank = rank;

  // Rows with a negative right-hand side are negated and get an artificial
  // basic variable; the others keep their unit pivot column as basic.
  Row<F> objective(n + 1, F(0));
  bool any_artificial = false;
  for (std::size_t i = 0; i < rank; ++i) {
    if (sign_of(rows[i][n]) < 0) {
      for (auto& v : rows[i]) {
        if (!is_zero(v)) v = -v;
      }
      basis[i] = kArtificial;
      any_artificial = true;
      for (std::size_t j = 0; j <= n; ++j) {
        if (!is_zero(rows[i][j])) objective[j] -= rows[i][j];
      }
    }
  }

  if (any_artificial) {
    auto basis_key = [&](std::size_t i) { return basis[i] == kArtificial ? n + i : basis[i]; };
    for (;;) {
      std::size_t entering = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(objective[j]) && sign_of(objective[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == n) break;

      std::size_t leaving = rank;
      for (std::size_t i = 0; i < rank; ++i) {
        const F& a = rows[i][entering];
        if (is_zero(a) || sign_of(a) <= 0) continue;
        if (leaving == rank) {
          leaving = i;
          continue;
        }
        // Compare rhs_i / a_i against rhs_l / a_l without dividing.
        const F& a_l = rows[leaving][entering];
        int cmp;
        if (is_zero(rows[i][n]) && is_zero(rows[leaving][n])) {
          cmp = 0;
        } else {
          cmp = sign_of(F(rows[i][n] * a_l - rows[leaving][n] * a));
        }
        if (cmp < 0 || (cmp == 0 && basis_key(i) < basis_key(leaving))) leaving = i;
      }
      if (leaving == rank) break;  // unbounded direction; cannot happen in phase one
      pivot<F>(rows, &objective, leaving, entering);
      basis[leaving] = entering;
    }
    if (!is_zero(objective[n])) return result;  // positive artificial sum

    // Drive zero-level artificials out of the basis.
    for (std::size_t i = 0; i < rank; ++i) {
      if (basis[i] != kArtificial) continue;
      std::size_t col = 0;
      while (col < n && is_zero(rows[i][col])) ++col;
      if (col == n) throw std::logic_error("dependent row survived rank reduction");
      pivot<F>(rows, nullptr, i, col);
      basis[i] = col;
    }
  }

  result.status = LpStatus::Feasible;
  for (std::size_t i = 0; i < rank; ++i) {
    if (sign_of(rows[i][n]) > 0) result.basic_solution.emplace(basis[i], rows[i][n]);
  }
  result.support_size = result.basic_solution.size();
  return result;
}

template FeasibilityResult<Rational> lp_feasible(const Matrix<Rational>&, const std::vector<Rational>&);
template FeasibilityResult<Cyclotomic> lp_feasible(const Matrix<Cyclotomic>&, const std::vector<Cyclotomic>&);

}  // namespace tvg
