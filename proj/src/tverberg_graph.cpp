#include "tvg/tverberg_graph.hpp"

#include "tvg/config_io.hpp"

namespace tvg {

void check_partition_cap(std::size_t n, std::size_t r, std::uint64_t max_partitions) {
  const Integer count = stirling2(n, r);
  if (count > Integer(static_cast<unsigned long>(max_partitions))) {
    throw TvgError(Errc::TooManyPartitions, "S(" + std::to_string(n) + "," + std::to_string(r) + ") = " +
                                                count.get_str() + " partitions exceeds the cap of " +
                                                std::to_string(max_partitions));
  }
}

template <ExactField F>
TverbergGraph<F> build_graph(const PointConfig<F>& config, std::size_t r, const BuildOptions& options) {
  const std::size_t n = config.size();
  if (r < 2 || r > n) throw TvgError(Errc::InvalidArguments, "need 2 <= r <= n");
  check_partition_cap(n, r, options.max_partitions);
  TverbergGraph<F> g{config, PartitionGraph{}};
  g.graph.n = n;
  g.graph.r = r;
  map_partitions(
      n, r, options.threads, [&](const Partition& p) { return static_cast<char>(is_tverberg(config, p).has_value()); },
      [&](const Partition& p, char keep) {
        if (keep) g.graph.vertices.push_back(p);
      });
  // Every Tverberg partition is a vertex, so a move target is Tverberg exactly
  // when it is found among the vertices.
  link_single_moves(g.graph);
  return g;
}

template <ExactField F>
std::string export_tverberg_graph(const TverbergGraph<F>& g, ExportFormat format, const GraphStats* stats) {
  nlohmann::ordered_json extra;
  extra["config"] = config_to_json(g.config);
  return export_graph(g.graph, format, stats, &extra);
}

template <ExactField F>
NerveCensus nerve_census(const PointConfig<F>& config, std::size_t r, const BuildOptions& options) {
  const std::size_t n = config.size();
  if (r < 2 || r > n) throw TvgError(Errc::InvalidArguments, "need 2 <= r <= n");
  check_partition_cap(n, r, options.max_partitions);
  NerveCensus census;
  census.r = r;
  map_partitions(
      n, r, options.threads, [&](const Partition& p) { return nerve(config, p); },
      [&](const Partition&, const NerveClass& c) {
        ++census.total;
        if (c.iso_class >= 0) ++census.classes[static_cast<std::size_t>(c.iso_class)];
        ++census.by_canonical_faces[c.canonical_faces];
      });
  return census;
}

#define TVG_INSTANTIATE_GRAPH(F)                                                                             \
  template TverbergGraph<F> build_graph(const PointConfig<F>&, std::size_t, const BuildOptions&);           \
  template std::string export_tverberg_graph(const TverbergGraph<F>&, ExportFormat, const GraphStats*);     \
  template NerveCensus nerve_census(const PointConfig<F>&, std::size_t, const BuildOptions&);

TVG_INSTANTIATE_GRAPH(Rational)
TVG_INSTANTIATE_GRAPH(Cyclotomic)

}  // namespace tvg
