#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "tvg/partition.hpp"
#include "tvg/partition_graph.hpp"
#include "tvg/point_config.hpp"
#include "tvg/rng.hpp"

namespace th {

using tvg::PointConfig;
using tvg::Rational;

inline PointConfig<Rational> rational_config(std::size_t dim, std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<std::vector<Rational>> out;
  for (const auto& p : pts) {
    std::vector<Rational> q;
    for (long c : p) q.emplace_back(c);
    out.push_back(std::move(q));
  }
  return {dim, std::move(out)};
}

/// n points with integer coordinates in [-range, range]; repeats and
/// collinearities are allowed on purpose.
inline PointConfig<Rational> small_grid_config(std::size_t n, std::size_t dim, long range, std::mt19937_64& rng) {
  std::vector<std::vector<Rational>> out(n);
  for (auto& p : out) {
    for (std::size_t k = 0; k < dim; ++k) p.emplace_back(tvg::uniform_int(rng, -range, range));
  }
  return {dim, std::move(out)};
}

/// Uniform labels in [0, r), redrawn until all r parts are used.
inline tvg::Partition random_partition(std::size_t n, std::size_t r, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> labels(n);
    for (auto& l : labels) l = static_cast<int>(tvg::uniform_int(rng, 0, static_cast<std::int64_t>(r) - 1));
    auto p = tvg::Partition::from_labels(labels);
    if (p.parts() == r) return p;
  }
}

inline std::size_t edge_total(const std::vector<std::vector<std::size_t>>& adj) {
  std::size_t s = 0;
  for (const auto& a : adj) s += a.size();
  return s / 2;
}

}  // namespace th
