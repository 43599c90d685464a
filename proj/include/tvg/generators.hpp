#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tvg/config_io.hpp"
#include "tvg/point_config.hpp"

namespace tvg {

/// Field order used for the regular n-gon.
constexpr unsigned polygon_field_order(std::size_t n) { return static_cast<unsigned>(4 * n); }

/// Vertices (cos 2πk/n, sin 2πk/n), k = 0..n-1, exact.  Throws InvalidArguments for n < 3.
PointConfig<Cyclotomic> regular_polygon(std::size_t n);

/// Perturbations are multiples of scale / 2^20.
inline constexpr std::int64_t kPerturbationSteps = std::int64_t{1} << 20;

/// r-1 points near each vertex of the standard simplex (0, e_1, ..., e_d), in
/// that order, then one point near the barycenter; Tv(d, r) points in general
/// position.  Throws DegenerateAfterRetries after 100 rejected draws.
PointConfig<Rational> perturbed_clusters(std::size_t d, std::size_t r, const Rational& scale, std::uint64_t seed);

/// Index of the barycenter point in perturbed_clusters output.
constexpr std::size_t cluster_barycenter_index(std::size_t d, std::size_t r) { return tverberg_number(d, r) - 1; }

/// n points with coordinates k / bound, k uniform in [-bound, bound], in
/// general position.  A degenerate draw is resampled up to 100 times.
PointConfig<Rational> random_uniform(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t bound = 1000);

struct GeneratorSpec {
  enum class Kind { RegularPolygon, PerturbedClusters, RandomUniform, FromFile };
  Kind kind = Kind::RegularPolygon;
  std::size_t n = 0;
  std::size_t d = 2;
  std::size_t r = 2;
  Rational scale{1, 1000};
  std::uint64_t seed = 0;
  std::int64_t bound = 1000;
  std::string path;
};

/// Accepted forms:
///   regular-polygon:8
///   clusters:d=2,r=3[,scale=1/1000][,seed=0]
///   random:n=7,d=2[,seed=0][,bound=1000]
///   file:<path>
/// Throws ParseError.
GeneratorSpec parse_generator_spec(std::string_view text);
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json generator_spec_to_json(const GeneratorSpec& spec);

AnyConfig generate(const GeneratorSpec& spec);

}  // namespace tvg
