#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tvg/point_config.hpp"

namespace tvg {

/// Sign of det[(p_i, 1)] over the d+1 given points.
template <ExactField F>
int orientation(const PointConfig<F>& config, std::span<const std::size_t> indices);

/// Basis of the affine dependences {alpha : sum alpha_i = 0, sum alpha_i p_i = 0}.
template <ExactField F>
std::vector<std::vector<F>> affine_dependence_kernel(const PointConfig<F>& config);

/// Every (d+1)-subset has nonzero orientation.  Throws TooFewPoints for n < d+1.
template <ExactField F>
bool in_general_position(const PointConfig<F>& config);

/// Whether point `index` lies in the convex hull of the others.
template <ExactField F>
bool in_hull_of_others(const PointConfig<F>& config, std::size_t index);

/// Planar points in convex position with no three concurrent segments spanned
/// by pairwise disjoint point pairs.  Throws WrongDimension / NotConvexPosition.
template <ExactField F>
bool strong_general_convex_position_2d(const PointConfig<F>& config);

}  // namespace tvg
