#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tvg/partition.hpp"
#include "tvg/point_config.hpp"

namespace tvg {

/// Witness that the convex hulls of the parts share a point.
template <ExactField F>
struct TverbergCertificate {
  std::vector<F> witness;
  /// Positive convex coefficients; within each part they sum to one.
  std::map<std::size_t, F> coefficients;
  /// Sorted indices with a positive coefficient.
  std::vector<std::size_t> support;
};

/// Common point of conv(parts[0]), ..., conv(parts[k-1]), each part a list of
/// point indices.  Returns nullopt if some part is empty or the hulls miss.
/// The certificate comes from a basic feasible solution, so its support has at
/// most k + d(k-1) points.
template <ExactField F>
std::optional<TverbergCertificate<F>> common_point(const PointConfig<F>& config,
                                                   const std::vector<std::vector<std::size_t>>& parts);

/// Throws PartitionMismatch when the partition's ground set is not the config.
template <ExactField F>
std::optional<TverbergCertificate<F>> is_tverberg(const PointConfig<F>& config, const Partition& p);

/// Replays a certificate exactly against the config and partition.
template <ExactField F>
bool certificate_valid(const PointConfig<F>& config, const Partition& p, const TverbergCertificate<F>& cert);

template <ExactField F>
nlohmann::ordered_json certificate_to_json(const TverbergCertificate<F>& cert);

/// Support of a certificate and the partition restricted to it (indices are
/// positions within the support).  Throws NotTverberg.
template <ExactField F>
std::pair<std::vector<std::size_t>, Partition> por_reduction(const PointConfig<F>& config, const Partition& p);

/// The sub-configuration on the given indices, in the given order.
template <ExactField F>
PointConfig<F> restrict_config(const PointConfig<F>& config, const std::vector<std::size_t>& indices);

/// valid[x][k]: moving point x into part k keeps the partition Tverberg (and
/// nonempty).  Entries for x's own part are false.
struct MoveTable {
  std::vector<std::vector<bool>> valid;

  std::size_t degree() const;
  bool essential(std::size_t x) const;
  std::vector<std::size_t> essential_points() const;
};

/// Throws NotTverberg.
template <ExactField F>
MoveTable essential_points(const PointConfig<F>& config, const Partition& p);

/// Degree of p in the Tverberg partition graph.  Throws NotTverberg.
template <ExactField F>
std::size_t tverberg_degree(const PointConfig<F>& config, const Partition& p);

/// Whether the hulls still meet after deleting any t points.
template <ExactField F>
bool tolerance_check(const PointConfig<F>& config, const Partition& p, std::size_t t);

/// Intersection pattern of the part hulls.
struct NerveClass {
  std::size_t r = 0;
  /// Bit masks over parts, sorted by size then value; downward closed.
  std::vector<std::uint32_t> faces;
  /// Lexicographically least face list over all part relabelings.
  std::vector<std::uint32_t> canonical_faces;
  /// For r = 3: 0..3 = number of intersecting pairs without a triple point,
  /// 4 = all three hulls meet.  -1 for other r.
  int iso_class = -1;
};

template <ExactField F>
NerveClass nerve(const PointConfig<F>& config, const Partition& p);

/// Canonical data for a downward-closed face set (exposed for tests).
NerveClass classify_faces(std::size_t r, std::vector<std::uint32_t> faces);

/// All Radon 2-partitions.
template <ExactField F>
std::vector<Partition> radon_partitions_via_kernel(const PointConfig<F>& config);

}  // namespace tvg
