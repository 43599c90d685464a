#include "tvg/predicates.hpp"

#include <algorithm>
#include <array>

#include "tvg/lp.hpp"

namespace tvg {

namespace {

template <ExactField F>
int determinant_sign(std::vector<std::vector<F>> a) {
  const std::size_t k = a.size();
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && is_zero(a[p][c])) ++p;
    if (p == k) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    sign *= sign_of(a[c][c]);
    const F inv = F(1) / a[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (is_zero(a[r][c])) continue;
      const F factor = a[r][c] * inv;
      for (std::size_t j = c + 1; j < k; ++j) a[r][j] -= factor * a[c][j];
    }
  }
  return sign;
}

template <ExactField F>
F cross(const std::vector<F>& o, const std::vector<F>& a, const std::vector<F>& b) {
  return F((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Point X where segments ab and cd cross in a single point, if any.
template <ExactField F>
std::optional<std::vector<F>> single_crossing(const std::vector<F>& a, const std::vector<F>& b,
                                              const std::vector<F>& c, const std::vector<F>& d) {
  const F rx = b[0] - a[0], ry = b[1] - a[1];
  const F sx = d[0] - c[0], sy = d[1] - c[1];
  const F denom = rx * sy - ry * sx;
  if (is_zero(denom)) return std::nullopt;
  const F qx = c[0] - a[0], qy = c[1] - a[1];
  const F t = (qx * sy - qy * sx) / denom;
  const F u = (qx * ry - qy * rx) / denom;
  if (sign_of(t) < 0 || sign_of(F(t - F(1))) > 0) return std::nullopt;
  if (sign_of(u) < 0 || sign_of(F(u - F(1))) > 0) return std::nullopt;
  return std::vector<F>{F(a[0] + t * rx), F(a[1] + t * ry)};
}

template <ExactField F>
bool on_closed_segment(const std::vector<F>& x, const std::vector<F>& e, const std::vector<F>& f) {
  if (!is_zero(cross(e, f, x))) return false;
  const F dot = (x[0] - e[0]) * (x[0] - f[0]) + (x[1] - e[1]) * (x[1] - f[1]);
  return sign_of(dot) <= 0;
}

}  // namespace

template <ExactField F>
int orientation(const PointConfig<F>& config, std::span<const std::size_t> indices) {
  const std::size_t d = config.dim();
  if (indices.size() != d + 1) {
    throw TvgError(Errc::DimensionMismatch, "orientation needs exactly d+1 point indices");
  }
  for (std::size_t i : indices) config.at(i);
  // det[(p_i, 1)] = (-1)^d det[p_i - p_0] for i = 1..d.
  if (d == 1) return sign_of(F(config[indices[0]][0] - config[indices[1]][0]));
  if (d == 2) return sign_of(cross(config[indices[0]], config[indices[1]], config[indices[2]]));
  std::vector<std::vector<F>> rows;
  for (std::size_t i = 1; i <= d; ++i) {
    std::vector<F> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = config[indices[i]][j] - config[indices[0]][j];
    rows.push_back(std::move(row));
  }
  const int s = determinant_sign(std::move(rows));
  return d % 2 == 0 ? s : -s;
}

template <ExactField F>
std::vector<std::vector<F>> affine_dependence_kernel(const PointConfig<F>& config) {
  const std::size_t n = config.size();
  const std::size_t d = config.dim();
  std::vector<std::vector<F>> m(d + 1, std::vector<F>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[j][i] = config[i][j];
    m[d][i] = F(1);
  }
  // Reduced row echelon form; the pivot search covers the whole remaining block.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row <= d; ++col) {
    std::size_t p = row;
    while (p <= d && is_zero(m[p][col])) ++p;
    if (p > d) continue;
    std::swap(m[p], m[row]);
    const F inv = F(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r <= d; ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const F factor = m[r][col];
      for (std::size_t j = 0; j < n; ++j) m[r][j] -= factor * m[row][j];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(n, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <ExactField F>
bool in_general_position(const PointConfig<F>& config) {
  const std::size_t k = config.dim() + 1;
  if (config.size() < k) throw TvgError(Errc::TooFewPoints, "general position needs at least d+1 points");
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  do {
    if (orientation(config, std::span<const std::size_t>(comb)) == 0) return false;
  } while (next_combination(comb, config.size()));
  return true;
}

template <ExactField F>
bool in_hull_of_others(const PointConfig<F>& config, std::size_t index) {
  const std::size_t n = config.size();
  const std::size_t d = config.dim();
  config.at(index);
  if (n == 1) return false;
  Matrix<F> a(d + 1, n - 1);
  std::vector<F> b(d + 1, F(0));
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == index) continue;
    for (std::size_t j = 0; j < d; ++j) a(j, col) = config[i][j];
    a(d, col) = F(1);
    ++col;
  }
  for (std::size_t j = 0; j < d; ++j) b[j] = config[index][j];
  b[d] = F(1);
  return lp_feasible(a, b).feasible();
}

template <ExactField F>
bool strong_general_convex_position_2d(const PointConfig<F>& config) {
  if (config.dim() != 2) throw TvgError(Errc::WrongDimension, "strong convex position is a planar notion");
  const std::size_t n = config.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (in_hull_of_others(config, i)) {
      throw TvgError(Errc::NotConvexPosition, "point " + std::to_string(i) + " is not a hull vertex");
    }
  }
  if (n < 6) return true;
  // Every 6-subset, every split into three pairs.
  static constexpr std::array<std::array<int, 6>, 15> kPairings = {{
      {0, 1, 2, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 5, 3, 4}, {0, 2, 1, 3, 4, 5}, {0, 2, 1, 4, 3, 5},
      {0, 2, 1, 5, 3, 4}, {0, 3, 1, 2, 4, 5}, {0, 3, 1, 4, 2, 5}, {0, 3, 1, 5, 2, 4}, {0, 4, 1, 2, 3, 5},
      {0, 4, 1, 3, 2, 5}, {0, 4, 1, 5, 2, 3}, {0, 5, 1, 2, 3, 4}, {0, 5, 1, 3, 2, 4}, {0, 5, 1, 4, 2, 3},
  }};
  std::vector<std::size_t> comb(6);
  for (std::size_t i = 0; i < 6; ++i) comb[i] = i;
  do {
    for (const auto& pairing : kPairings) {
      const auto& a = config[comb[pairing[0]]];
      const auto& b = config[comb[pairing[1]]];
      const auto& c = config[comb[pairing[2]]];
      const auto& d = config[comb[pairing[3]]];
      const auto x = single_crossing(a, b, c, d);
      if (x && on_closed_segment(*x, config[comb[pairing[4]]], config[comb[pairing[5]]])) return false;
    }
  } while (next_combination(comb, n));
  return true;
}

#define TVG_INSTANTIATE_PREDICATES(F)                                                       \
  template int orientation(const PointConfig<F>&, std::span<const std::size_t>);           \
  template std::vector<std::vector<F>> affine_dependence_kernel(const PointConfig<F>&);    \
  template bool in_general_position(const PointConfig<F>&);                                \
  template bool in_hull_of_others(const PointConfig<F>&, std::size_t);                     \
  template bool strong_general_convex_position_2d(const PointConfig<F>&);

TVG_INSTANTIATE_PREDICATES(Rational)
TVG_INSTANTIATE_PREDICATES(Cyclotomic)

}  // namespace tvg
