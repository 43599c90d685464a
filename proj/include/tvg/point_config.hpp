#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tvg/error.hpp"
#include "tvg/field.hpp"

namespace tvg {

/// A labeled finite point list in R^d.  Point i carries the stable label i.
template <ExactField F>
class PointConfig {
 public:
  using Point = std::vector<F>;

  PointConfig(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) throw TvgError(Errc::InvalidArguments, "dimension must be positive");
    if (points_.empty()) throw TvgError(Errc::EmptyInput, "a configuration needs at least one point");
    for (const auto& p : points_) {
      if (p.size() != dim_) {
        throw TvgError(Errc::DimensionMismatch,
                       "point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(dim_));
      }
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const Point& at(std::size_t i) const {
    if (i >= points_.size()) throw TvgError(Errc::IndexOutOfRange, "point index " + std::to_string(i));
    return points_[i];
  }
  const std::vector<Point>& points() const noexcept { return points_; }

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
};

/// Tv(d, r) = (d + 1)(r - 1) + 1.
constexpr std::size_t tverberg_number(std::size_t dim, std::size_t parts) { return (dim + 1) * (parts - 1) + 1; }

}  // namespace tvg
