#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tvg/parallel.hpp"
#include "tvg/partition_graph.hpp"
#include "tvg/tverberg.hpp"

namespace tvg {

inline constexpr std::uint64_t kDefaultMaxPartitions = 5'000'000;

struct BuildOptions {
  std::uint64_t max_partitions = kDefaultMaxPartitions;
  unsigned threads = 1;
};

/// Throws TooManyPartitions when S(n, r) exceeds the cap.
void check_partition_cap(std::size_t n, std::size_t r, std::uint64_t max_partitions);

/// Evaluates fn on every r-partition, in chunks spread over `threads` workers,
/// and hands (partition, result) to sink in enumeration order.
template <class Fn, class Sink>
void map_partitions(std::size_t n, std::size_t r, unsigned threads, Fn&& fn, Sink&& sink) {
  constexpr std::size_t kChunk = 2048;
  PartitionEnumerator e(n, r);
  std::vector<Partition> chunk;
  using Result = decltype(fn(std::declval<const Partition&>()));
  for (;;) {
    chunk.clear();
    while (chunk.size() < kChunk) {
      auto p = e.next();
      if (!p) break;
      chunk.push_back(std::move(*p));
    }
    if (chunk.empty()) return;
    std::vector<Result> results(chunk.size());
    parallel_for(chunk.size(), threads, [&](std::size_t i) { results[i] = fn(chunk[i]); });
    for (std::size_t i = 0; i < chunk.size(); ++i) sink(chunk[i], results[i]);
  }
}

template <ExactField F>
struct TverbergGraph {
  PointConfig<F> config;
  PartitionGraph graph;

  std::size_t r() const noexcept { return graph.r; }
  std::size_t degree(std::size_t v) const { return graph.adjacency.at(v).size(); }
};

/// G_T[S, r]: the Tverberg r-partitions of the config, adjacent when one
/// single-element move turns one into the other.  Throws InvalidArguments
/// unless 2 <= r <= n, and TooManyPartitions past the cap.
template <ExactField F>
TverbergGraph<F> build_graph(const PointConfig<F>& config, std::size_t r, const BuildOptions& options = {});

/// DOT / CSV as for partition graphs; JSON additionally carries the exact coordinates.
template <ExactField F>
std::string export_tverberg_graph(const TverbergGraph<F>& g, ExportFormat format, const GraphStats* stats = nullptr);

struct NerveCensus {
  std::size_t r = 0;
  std::uint64_t total = 0;
  /// r = 3: counts of iso classes 0..4 (no edge, one, two, three edges, filled).
  std::array<std::uint64_t, 5> classes{};
  /// Counts keyed by canonical face list, for any r.
  std::map<std::vector<std::uint32_t>, std::uint64_t> by_canonical_faces;
};

template <ExactField F>
NerveCensus nerve_census(const PointConfig<F>& config, std::size_t r, const BuildOptions& options = {});

}  // namespace tvg
