#include "tvg/config_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

namespace tvg {

std::size_t AnyConfig::size() const {
  return std::visit([](const auto& c) { return c.size(); }, config);
}

std::size_t AnyConfig::dim() const {
  return std::visit([](const auto& c) { return c.dim(); }, config);
}

std::string AnyConfig::scalar_name() const {
  if (cyclotomic_order == 0) return "rational";
  return "cyclotomic:" + std::to_string(cyclotomic_order);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

AnyConfig read_config(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::string header;
  while (std::getline(in, line)) {
    ++line_no;
    header = trim(line);
    if (!header.empty()) break;
  }
  static const std::regex kHeader(R"(#\s*dim=(\d+)\s+scalar=(rational|cyclotomic:(\d+))\s*)");
  std::smatch m;
  if (!std::regex_match(header, m, kHeader)) {
    throw TvgError(Errc::ParseError, "line " + std::to_string(line_no) + ": expected '# dim=<d> scalar=<...>' header");
  }
  const unsigned long dim_value = std::stoul(m[1].str());
  if (dim_value == 0 || dim_value > 64) throw TvgError(Errc::ParseError, "unsupported dimension " + m[1].str());
  const std::size_t dim = dim_value;
  unsigned order = 0;
  if (m[3].matched) {
    const unsigned long o = std::stoul(m[3].str());
    if (o < 3 || o > 10000) throw TvgError(Errc::ParseError, "unsupported cyclotomic order " + m[3].str());
    order = static_cast<unsigned>(o);
  }

  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fields = split_fields(t);
    if (fields.size() != dim) {
      throw TvgError(Errc::ParseError, "line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                                           " coordinates, found " + std::to_string(fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) throw TvgError(Errc::EmptyInput, "the file contains no points");

  auto wrap = [&](auto&& parse) {
    using F = std::decay_t<decltype(parse(std::string()))>;
    std::vector<std::vector<F>> pts;
    for (const auto& row : rows) {
      std::vector<F> p;
      for (const auto& field : row) p.push_back(parse(field));
      pts.push_back(std::move(p));
    }
    return PointConfig<F>(dim, std::move(pts));
  };
  if (order == 0) return AnyConfig{wrap([](const std::string& s) { return parse_rational(s); }), 0};
  const CyclotomicField& field = CyclotomicField::get(order);
  return AnyConfig{wrap([&](const std::string& s) { return parse_cyclotomic(field, s); }), order};
}

AnyConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TvgError(Errc::ParseError, "cannot open '" + path + "'");
  return read_config(in);
}

namespace {

template <ExactField F>
void write_points(std::ostream& out, const PointConfig<F>& config) {
  for (const auto& p : config.points()) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out << ',';
      out << to_string(p[j]);
    }
    out << '\n';
  }
}

}  // namespace

void write_config(std::ostream& out, const PointConfig<Rational>& config) {
  out << "# dim=" << config.dim() << " scalar=rational\n";
  write_points(out, config);
}

void write_config(std::ostream& out, const PointConfig<Cyclotomic>& config, unsigned order) {
  for (const auto& p : config.points()) {
    for (const auto& x : p) {
      if (x.field() != nullptr && !x.is_rational() && x.field()->order() != order) {
        throw TvgError(Errc::FieldMismatch, "coordinate outside the declared cyclotomic field");
      }
    }
  }
  out << "# dim=" << config.dim() << " scalar=cyclotomic:" << order << '\n';
  write_points(out, config);
}

void write_config(std::ostream& out, const AnyConfig& config) {
  if (const auto* c = std::get_if<PointConfig<Rational>>(&config.config)) {
    write_config(out, *c);
  } else {
    write_config(out, std::get<PointConfig<Cyclotomic>>(config.config), config.cyclotomic_order);
  }
}

template <ExactField F>
nlohmann::ordered_json config_to_json(const PointConfig<F>& config) {
  nlohmann::ordered_json j;
  j["dim"] = config.dim();
  j["scalar"] = field_name<F>();
  auto pts = nlohmann::ordered_json::array();
  for (const auto& p : config.points()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : p) row.push_back(to_string(x));
    pts.push_back(row);
  }
  j["points"] = pts;
  return j;
}

template nlohmann::ordered_json config_to_json(const PointConfig<Rational>&);
template nlohmann::ordered_json config_to_json(const PointConfig<Cyclotomic>&);

}  // namespace tvg
