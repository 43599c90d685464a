#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tvg/partition.hpp"

namespace tvg {

/// Graph whose vertices are r-partitions of an n-set, adjacent at distance one.
/// Vertices are kept in lexicographic restricted-growth order; adjacency lists
/// are sorted vertex indices.
struct PartitionGraph {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Partition> vertices;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t edge_count() const;
  /// Index of `p` among the vertices, if present.
  std::optional<std::size_t> find(const Partition& p) const;
};

/// Links every vertex to the vertices reachable by one single-element move.
void link_single_moves(PartitionGraph& graph);

/// The full partition graph G[n, r].
PartitionGraph build_abstract_graph(std::size_t n, std::size_t r);

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<std::size_t, std::size_t> degree_histogram;
  std::size_t component_count = 0;
  std::size_t largest_component_size = 0;
  /// Diameter of the largest component; absent for the empty graph.
  std::optional<std::size_t> diameter;
  std::size_t clique_number = 0;
  /// component[v] numbers components by their smallest vertex.
  std::vector<std::size_t> component;
};

struct StatsOptions {
  bool diameter = true;
  bool clique = true;
};

GraphStats graph_stats(const PartitionGraph& graph, const StatsOptions& options = {});

/// Exact maximum clique size by branch and bound.
std::size_t clique_number(const PartitionGraph& graph);

enum class ExportFormat { Dot, Json, Csv };

/// Throws UnsupportedFormat for anything but "dot", "json" or "csv".
ExportFormat parse_export_format(std::string_view name);

nlohmann::ordered_json stats_to_json(const GraphStats& stats);

/// Serializes the graph.  `extra` members (for example exact coordinates) are
/// appended to the JSON document and ignored by the other formats.
std::string export_graph(const PartitionGraph& graph, ExportFormat format, const GraphStats* stats = nullptr,
                         const nlohmann::ordered_json* extra = nullptr);

inline constexpr int kFormatVersion = 1;

}  // namespace tvg
