#pragma once

#include <string>
#include <vector>

#include "tvg/tverberg.hpp"

namespace tvg {

/// Walk between two Radon partitions through Radon partitions, one
/// single-element move per step, following the sign changes of the affine
/// dependence (1-t) alpha + t beta built from the two certificates.
/// Throws NotRadon unless both are 2-partitions with intersecting hulls.
template <ExactField F>
std::vector<Partition> radon_path(const PointConfig<F>& config, const Partition& p, const Partition& q);

struct TverbergPathOptions {
  /// Attempt the construction below 3 Tv(d, r) - 1 points instead of throwing
  /// TooFewPoints; failure then raises NoPathFound.
  bool best_effort = false;
};

/// Walk between two Tverberg r-partitions through Tverberg partitions, built
/// from the certificate supports.  Throws NotTverberg, TooFewPoints, NoPathFound.
template <ExactField F>
std::vector<Partition> tverberg_path(const PointConfig<F>& config, const Partition& p, const Partition& q,
                                     const TverbergPathOptions& options = {});

struct PathCheck {
  bool ok = true;
  /// Per-step marks: step i is Tverberg and (for i > 0) at distance 1 from step i-1.
  std::vector<bool> step_ok;
  std::string message;
};

/// Endpoints, per-step Tverberg membership and unit distance between steps.
template <ExactField F>
PathCheck validate_path(const PointConfig<F>& config, const std::vector<Partition>& path, const Partition& p,
                        const Partition& q);

}  // namespace tvg
