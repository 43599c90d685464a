#include "tvg/generators.hpp"

#include <charconv>
#include <map>

#include "tvg/predicates.hpp"
#include "tvg/rng.hpp"

namespace tvg {

namespace {

constexpr int kMaxRetries = 100;

bool next_subset(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Whether `candidate` keeps pts + {candidate} in general position, given that
// pts already is.
bool extends_general_position(std::size_t d, const std::vector<std::vector<Rational>>& pts,
                              const std::vector<Rational>& candidate) {
  auto all = pts;
  all.push_back(candidate);
  PointConfig<Rational> config(d, std::move(all));
  const std::size_t last = pts.size();
  if (last < d + 1) return affine_dependence_kernel(config).empty();
  std::vector<std::size_t> comb(d);
  for (std::size_t i = 0; i < d; ++i) comb[i] = i;
  std::vector<std::size_t> idx(d + 1);
  do {
    std::copy(comb.begin(), comb.end(), idx.begin());
    idx[d] = last;
    if (orientation(config, std::span<const std::size_t>(idx)) == 0) return false;
  } while (next_subset(comb, last));
  return true;
}

}  // namespace

PointConfig<Cyclotomic> regular_polygon(std::size_t n) {
  if (n < 3) throw TvgError(Errc::InvalidArguments, "a regular polygon needs at least 3 vertices");
  const CyclotomicField& field = CyclotomicField::get(polygon_field_order(n));
  const long nn = static_cast<long>(n);
  std::vector<std::vector<Cyclotomic>> pts;
  pts.reserve(n);
  // sin(2πk/n) = cos(2π(4k - n)/(4n))
  for (long k = 0; k < nn; ++k) {
    pts.push_back({Cyclotomic::cos_2pi(field, 4 * k), Cyclotomic::cos_2pi(field, 4 * k - nn)});
  }
  return PointConfig<Cyclotomic>(2, std::move(pts));
}

PointConfig<Rational> perturbed_clusters(std::size_t d, std::size_t r, const Rational& scale, std::uint64_t seed) {
  if (d < 1 || r < 2) throw TvgError(Errc::InvalidArguments, "clusters need d >= 1 and r >= 2");
  if (sgn(scale) <= 0) throw TvgError(Errc::InvalidArguments, "perturbation scale must be positive");
  std::vector<std::vector<Rational>> centers;
  for (std::size_t v = 0; v <= d; ++v) {
    std::vector<Rational> c(d, Rational(0));
    if (v > 0) c[v - 1] = 1;
    for (std::size_t copy = 0; copy + 1 < r; ++copy) centers.push_back(c);
  }
  centers.emplace_back(d, Rational(1, static_cast<unsigned long>(d + 1)));

  const Rational step = scale / Rational(kPerturbationSteps);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(attempt));
    std::vector<std::vector<Rational>> pts;
    for (const auto& c : centers) {
      std::vector<Rational> p = c;
      for (auto& x : p) x += step * Rational(uniform_int(rng, -kPerturbationSteps, kPerturbationSteps));
      pts.push_back(std::move(p));
    }
    PointConfig<Rational> config(d, std::move(pts));
    if (in_general_position(config)) return config;
  }
  throw TvgError(Errc::DegenerateAfterRetries, "no general-position perturbation after 100 attempts");
}

PointConfig<Rational> random_uniform(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t bound) {
  if (n < 1 || d < 1) throw TvgError(Errc::InvalidArguments, "random_uniform needs n >= 1 and d >= 1");
  if (bound < 1) throw TvgError(Errc::InvalidArguments, "coordinate bound must be positive");
  auto rng = make_rng(seed);
  const Integer den(static_cast<long>(bound));
  std::vector<std::vector<Rational>> pts;
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRetries && !placed; ++attempt) {
      std::vector<Rational> p;
      for (std::size_t j = 0; j < d; ++j) {
        Rational x(Integer(static_cast<long>(uniform_int(rng, -bound, bound))), den);
        x.canonicalize();
        p.push_back(x);
      }
      if (extends_general_position(d, pts, p)) {
        pts.push_back(std::move(p));
        placed = true;
      }
    }
    if (!placed) {
      throw TvgError(Errc::DegenerateAfterRetries, "point " + std::to_string(i) + " stayed degenerate after 100 draws");
    }
  }
  return PointConfig<Rational>(d, std::move(pts));
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw TvgError(Errc::ParseError, "bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

std::map<std::string, std::string> parse_keyvals(std::string_view body) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view item = body.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw TvgError(Errc::ParseError, "expected key=value, got '" + std::string(item) + "'");
    }
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    pos = end + 1;
  }
  return out;
}

void apply_keyvals(GeneratorSpec& spec, const std::map<std::string, std::string>& kv,
                   std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : kv) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw TvgError(Errc::ParseError, "unknown generator parameter '" + key + "'");
    }
    if (key == "n") spec.n = parse_u64(key, value);
    if (key == "d") spec.d = parse_u64(key, value);
    if (key == "r") spec.r = parse_u64(key, value);
    if (key == "seed") spec.seed = parse_u64(key, value);
    if (key == "bound") spec.bound = static_cast<std::int64_t>(parse_u64(key, value));
    if (key == "scale") spec.scale = parse_rational(value);
  }
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw TvgError(Errc::ParseError, "generator spec must look like kind:params, got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  GeneratorSpec spec;
  if (kind == "regular-polygon") {
    spec.kind = GeneratorSpec::Kind::RegularPolygon;
    spec.n = parse_u64("n", body);
  } else if (kind == "clusters") {
    spec.kind = GeneratorSpec::Kind::PerturbedClusters;
    apply_keyvals(spec, parse_keyvals(body), {"d", "r", "scale", "seed"});
  } else if (kind == "random") {
    spec.kind = GeneratorSpec::Kind::RandomUniform;
    apply_keyvals(spec, parse_keyvals(body), {"n", "d", "seed", "bound"});
  } else if (kind == "file") {
    spec.kind = GeneratorSpec::Kind::FromFile;
    spec.path = std::string(body);
  } else {
    throw TvgError(Errc::ParseError, "unknown generator '" + std::string(kind) + "'");
  }
  return spec;
}

GeneratorSpec generator_spec_from_json(const nlohmann::json& j) {
  try {
    GeneratorSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "regular-polygon") {
      spec.kind = GeneratorSpec::Kind::RegularPolygon;
      spec.n = j.at("n").get<std::size_t>();
    } else if (kind == "clusters") {
      spec.kind = GeneratorSpec::Kind::PerturbedClusters;
      spec.d = j.at("d").get<std::size_t>();
      spec.r = j.at("r").get<std::size_t>();
      if (j.contains("scale")) spec.scale = parse_rational(j["scale"].get<std::string>());
      spec.seed = j.value("seed", std::uint64_t{0});
    } else if (kind == "random") {
      spec.kind = GeneratorSpec::Kind::RandomUniform;
      spec.n = j.at("n").get<std::size_t>();
      spec.d = j.at("d").get<std::size_t>();
      spec.seed = j.value("seed", std::uint64_t{0});
      spec.bound = j.value("bound", std::int64_t{1000});
    } else if (kind == "file") {
      spec.kind = GeneratorSpec::Kind::FromFile;
      spec.path = j.at("path").get<std::string>();
    } else {
      throw TvgError(Errc::ParseError, "unknown generator '" + kind + "'");
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw TvgError(Errc::ParseError, std::string("generator stanza: ") + e.what());
  }
}

nlohmann::ordered_json generator_spec_to_json(const GeneratorSpec& spec) {
  nlohmann::ordered_json j;
  switch (spec.kind) {
    case GeneratorSpec::Kind::RegularPolygon:
      j["kind"] = "regular-polygon";
      j["n"] = spec.n;
      break;
    case GeneratorSpec::Kind::PerturbedClusters:
      j["kind"] = "clusters";
      j["d"] = spec.d;
      j["r"] = spec.r;
      j["scale"] = to_string(spec.scale);
      j["seed"] = spec.seed;
      break;
    case GeneratorSpec::Kind::RandomUniform:
      j["kind"] = "random";
      j["n"] = spec.n;
      j["d"] = spec.d;
      j["seed"] = spec.seed;
      j["bound"] = spec.bound;
      break;
    case GeneratorSpec::Kind::FromFile:
      j["kind"] = "file";
      j["path"] = spec.path;
      break;
  }
  return j;
}

AnyConfig generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::RegularPolygon:
      return AnyConfig{regular_polygon(spec.n), polygon_field_order(spec.n)};
    case GeneratorSpec::Kind::PerturbedClusters:
      return AnyConfig{perturbed_clusters(spec.d, spec.r, spec.scale, spec.seed), 0};
    case GeneratorSpec::Kind::RandomUniform:
      return AnyConfig{random_uniform(spec.n, spec.d, spec.seed, spec.bound), 0};
    case GeneratorSpec::Kind::FromFile:
      return read_config_file(spec.path);
  }
  throw TvgError(Errc::InvalidArguments, "unknown generator kind");
}

}  // namespace tvg
