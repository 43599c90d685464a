#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "json.hpp"
#include "tvg/point_config.hpp"

namespace tvg {

/// A configuration over either scalar field, as read from a file.
struct AnyConfig {
  std::variant<PointConfig<Rational>, PointConfig<Cyclotomic>> config;
  /// Field order for cyclotomic configurations, 0 for rational ones.
  unsigned cyclotomic_order = 0;

  std::size_t size() const;
  std::size_t dim() const;
  std::string scalar_name() const;
};

/// Point-set CSV:
///
///   # dim=2 scalar=rational            or   # dim=2 scalar=cyclotomic:32
///   1/2,-3                                  [0 1/2],[1]
///
/// Rational entries are integers or p/q.  Cyclotomic entries use the bracket
/// syntax of to_string(Cyclotomic).  Blank lines and later '#' lines are
/// ignored.  Throws ParseError on malformed text and EmptyInput when the file
/// has a header but no points.
AnyConfig read_config(std::istream& in);
AnyConfig read_config_file(const std::string& path);

void write_config(std::ostream& out, const PointConfig<Rational>& config);
void write_config(std::ostream& out, const PointConfig<Cyclotomic>& config, unsigned order);
void write_config(std::ostream& out, const AnyConfig& config);

/// Exact coordinates as strings, for embedding in JSON outputs.
template <ExactField F>
nlohmann::ordered_json config_to_json(const PointConfig<F>& config);

}  // namespace tvg
