#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "json.hpp"
#include "tvg/point_config.hpp"

namespace tvg {

/// Each base point a becomes the block X_a = {(a, 1) ⊗ v_j : j = 1..r} in
/// dimension (d + 1)(r - 1), with v_j = e_j for j < r and v_r = -(e_1 + ... + e_{r-1}).
template <ExactField F>
struct LiftedConfig {
  PointConfig<F> base;
  std::size_t r = 0;
  std::size_t lifted_dim = 0;
  std::vector<std::vector<F>> simplex_vectors;
  /// lifted[a][j] = (a, 1) ⊗ v_j.
  std::vector<std::vector<std::vector<F>>> lifted;
};

/// Throws InvalidArguments for r < 2.
template <ExactField F>
LiftedConfig<F> sarkaria_lift(const PointConfig<F>& config, std::size_t r);

/// Whether the origin lies in conv{(a_i, 1) ⊗ v_{labels[i]}}.  Labels are
/// 0-based part numbers below r; parts may be empty.
template <ExactField F>
bool tverberg_via_lift(const LiftedConfig<F>& lifted, const std::vector<int>& labels);

/// Whether the origin lies in conv(X_a) for every block.
template <ExactField F>
bool lift_blocks_contain_origin(const LiftedConfig<F>& lifted);

struct McTrial {
  std::uint64_t trial = 0;
  std::vector<int> labels;
  std::size_t nonempty_parts = 0;
  bool is_tverberg = false;
  bool is_max_degree = false;
};

struct McResult {
  std::size_t n = 0, d = 0, r = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t successes = 0;
  double frequency = 0.0;
  double bound = 0.0;
  std::vector<McTrial> log;
};

/// Draws `trials` uniform labelings (trial t uses the stream (seed, t)) and
/// counts those with exactly r nonempty parts that are Tverberg and survive
/// every single-point deletion, i.e. have degree n(r - 1).
template <ExactField F>
McResult mc_max_degree_probability(const PointConfig<F>& config, std::size_t r, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads = 1);

/// CSV with columns trial,label_vector,nonempty_parts,is_tverberg,is_max_degree.
void write_mc_log(std::ostream& out, const McResult& result);
nlohmann::ordered_json mc_summary_json(const McResult& result);

/// 1 - r^k n^k exp(-2 (n - r)^2 / (n r^2)) with k = (r - 1)(d + 1); may be negative.
/// Throws InvalidArguments unless n > r.
double probability_lower_bound(std::size_t n, std::size_t r, std::size_t d);

struct TolerancePointBounds {
  std::uint64_t general = 0;  // (t + 1)(r - 1)(d + 1) + 1
  std::uint64_t low_dim = 0;  // 2^(d - 1) (r (t + 2) - 1)
};

/// Throws InvalidArguments unless d, r >= 1.
TolerancePointBounds tolerance_point_bounds(std::size_t d, std::size_t t, std::size_t r);

}  // namespace tvg
