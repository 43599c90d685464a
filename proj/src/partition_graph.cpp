#include "tvg/partition_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "tvg/error.hpp"

namespace tvg {

std::size_t PartitionGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

std::optional<std::size_t> PartitionGraph::find(const Partition& p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

void link_single_moves(PartitionGraph& graph) {
  graph.adjacency.assign(graph.vertices.size(), {});
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    const Partition& p = graph.vertices[v];
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!p.can_move(x)) continue;
      for (std::size_t k = 0; k < p.parts(); ++k) {
        if (k == p.part_of(x)) continue;
        if (auto w = graph.find(p.moved(x, k))) graph.adjacency[v].push_back(*w);
      }
    }
    auto& nbrs = graph.adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
}

PartitionGraph build_abstract_graph(std::size_t n, std::size_t r) {
  PartitionGraph g;
  g.n = n;
  g.r = r;
  g.vertices = enumerate_r_partitions(n, r);
  link_single_moves(g);
  return g;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> bfs_distances(const PartitionGraph& g, std::size_t source) {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.vertices.size(), kUnseen);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.adjacency[v]) {
      if (dist[w] != kUnseen) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const PartitionGraph& g) : g_(g) {}

  std::size_t run() {
    const std::size_t n = g_.vertices.size();
    if (n == 0) return 0;
    best_ = 1;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> cand;
      for (std::size_t w : g_.adjacency[v]) {
        if (w > v) cand.push_back(w);
      }
      expand(1, cand);
    }
    return best_;
  }

 private:
  void expand(std::size_t size, const std::vector<std::size_t>& cand) {
    if (cand.empty()) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + cand.size() <= best_) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (size + (cand.size() - i) <= best_) return;
      std::vector<std::size_t> next;
      const auto& nbrs = g_.adjacency[cand[i]];
      std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), nbrs.begin(), nbrs.end(),
                            std::back_inserter(next));
      expand(size + 1, next);
    }
  }

  const PartitionGraph& g_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t clique_number(const PartitionGraph& graph) { return CliqueSearch(graph).run(); }

GraphStats graph_stats(const PartitionGraph& graph, const StatsOptions& options) {
  GraphStats s;
  const std::size_t n = graph.vertices.size();
  s.vertex_count = n;
  s.edge_count = graph.edge_count();
  for (const auto& nbrs : graph.adjacency) ++s.degree_histogram[nbrs.size()];

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  s.component.assign(n, kNone);
  std::vector<std::size_t> sizes;
  std::size_t largest_root = kNone;
  for (std::size_t v = 0; v < n; ++v) {
    if (s.component[v] != kNone) continue;
    const std::size_t id = s.component_count++;
    std::size_t size = 0;
    std::vector<std::size_t> stack{v};
    s.component[v] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t w : graph.adjacency[u]) {
        if (s.component[w] == kNone) {
          s.component[w] = id;
          stack.push_back(w);
        }
      }
    }
    if (size > s.largest_component_size) {
      s.largest_component_size = size;
      largest_root = v;
    }
  }

  if (options.diameter && n > 0) {
    std::size_t diameter = 0;
    const std::size_t target = s.component[largest_root];
    for (std::size_t v = 0; v < n; ++v) {
      if (s.component[v] != target) continue;
      for (std::size_t d : bfs_distances(graph, v)) {
        if (d != kNone) diameter = std::max(diameter, d);
      }
    }
    s.diameter = diameter;
  }
  if (options.clique) s.clique_number = clique_number(graph);
  return s;
}

// ---------------------------------------------------------------------------

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  if (name == "csv") return ExportFormat::Csv;
  throw TvgError(Errc::UnsupportedFormat, "unknown export format '" + std::string(name) + "'");
}

nlohmann::ordered_json stats_to_json(const GraphStats& stats) {
  nlohmann::ordered_json j;
  j["vertices"] = stats.vertex_count;
  j["edges"] = stats.edge_count;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [deg, count] : stats.degree_histogram) hist[std::to_string(deg)] = count;
  j["degree_histogram"] = hist;
  j["components"] = stats.component_count;
  j["largest_component"] = stats.largest_component_size;
  j["diameter"] = stats.diameter ? nlohmann::ordered_json(*stats.diameter) : nlohmann::ordered_json(nullptr);
  j["clique_number"] = stats.clique_number;
  return j;
}

std::string export_graph(const PartitionGraph& graph, ExportFormat format, const GraphStats* stats,
                         const nlohmann::ordered_json* extra) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::Dot: {
      out << "graph G {\n";
      for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        out << "  v" << v << " [label=\"" << graph.vertices[v].to_string() << "\"];\n";
      }
      for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        for (std::size_t w : graph.adjacency[v]) {
          if (w > v) out << "  v" << v << " -- v" << w << ";\n";
        }
      }
      out << "}\n";
      break;
    }
    case ExportFormat::Csv: {
      out << "source,target\n";
      for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
        for (std::size_t w : graph.adjacency[v]) {
          if (w > v) out << '"' << graph.vertices[v].to_string() << "\",\"" << graph.vertices[w].to_string() << "\"\n";
        }
      }
      break;
    }
    case ExportFormat::Json: {
      nlohmann::ordered_json j;
      j["format_version"] = kFormatVersion;
      j["n"] = graph.n;
      j["r"] = graph.r;
      auto vertices = nlohmann::ordered_json::array();
      for (const auto& p : graph.vertices) vertices.push_back(p.to_string());
      j["vertices"] = vertices;
      j["adjacency"] = graph.adjacency;
      if (stats != nullptr) j["stats"] = stats_to_json(*stats);
      if (extra != nullptr) {
        for (const auto& [key, value] : extra->items()) j[key] = value;
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace tvg
