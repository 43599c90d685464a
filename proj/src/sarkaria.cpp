#include "tvg/sarkaria.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tvg/lp.hpp"
#include "tvg/parallel.hpp"
#include "tvg/rng.hpp"
#include "tvg/tverberg.hpp"

namespace tvg {

template <ExactField F>
LiftedConfig<F> sarkaria_lift(const PointConfig<F>& config, std::size_t r) {
  if (r < 2) throw TvgError(Errc::InvalidArguments, "the lift needs r >= 2");
  const std::size_t d = config.dim();
  LiftedConfig<F> out{config, r, (d + 1) * (r - 1), {}, {}};
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<F> v(r - 1, F(0));
    if (j + 1 < r) {
      v[j] = F(1);
    } else {
      std::fill(v.begin(), v.end(), F(-1));
    }
    out.simplex_vectors.push_back(std::move(v));
  }
  for (const auto& a : config.points()) {
    std::vector<F> a1 = a;
    a1.push_back(F(1));
    std::vector<std::vector<F>> block;
    for (const auto& v : out.simplex_vectors) {
      // Kronecker product, v-index major: entry (k, c) sits at k (d + 1) + c.
      std::vector<F> y;
      y.reserve(out.lifted_dim);
      for (const auto& vk : v) {
        for (const auto& ac : a1) y.push_back(vk * ac);
      }
      block.push_back(std::move(y));
    }
    out.lifted.push_back(std::move(block));
  }
  return out;
}

namespace {

template <ExactField F>
bool origin_in_hull(const std::vector<const std::vector<F>*>& pts, std::size_t dim) {
  Matrix<F> a(dim + 1, pts.size());
  std::vector<F> b(dim + 1, F(0));
  b[dim] = F(1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t c = 0; c < dim; ++c) a(c, i) = (*pts[i])[c];
    a(dim, i) = F(1);
  }
  return lp_feasible(a, b).feasible();
}

}  // namespace

template <ExactField F>
bool tverberg_via_lift(const LiftedConfig<F>& lifted, const std::vector<int>& labels) {
  if (labels.size() != lifted.lifted.size()) {
    throw TvgError(Errc::SizeMismatch, "one label per base point is required");
  }
  std::vector<const std::vector<F>*> pts;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= lifted.r) {
      throw TvgError(Errc::InvalidArguments, "label out of range");
    }
    pts.push_back(&lifted.lifted[i][static_cast<std::size_t>(labels[i])]);
  }
  return origin_in_hull(pts, lifted.lifted_dim);
}

template <ExactField F>
bool lift_blocks_contain_origin(const LiftedConfig<F>& lifted) {
  for (const auto& block : lifted.lifted) {
    std::vector<const std::vector<F>*> pts;
    for (const auto& y : block) pts.push_back(&y);
    if (!origin_in_hull(pts, lifted.lifted_dim)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

template <ExactField F>
McResult mc_max_degree_probability(const PointConfig<F>& config, std::size_t r, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw TvgError(Errc::InvalidArguments, "at least one trial is required");
  if (r < 2) throw TvgError(Errc::InvalidArguments, "need r >= 2");
  const std::size_t n = config.size();
  McResult result;
  result.n = n;
  result.d = config.dim();
  result.r = r;
  result.trials = trials;
  result.seed = seed;
  result.bound = n > r ? probability_lower_bound(n, r, config.dim()) : 0.0;
  result.log.resize(trials);

  parallel_for(trials, threads, [&](std::size_t t) {
    McTrial& row = result.log[t];
    row.trial = t;
    auto rng = make_rng(seed, t);
    row.labels.resize(n);
    std::vector<std::vector<std::size_t>> parts(r);
    for (std::size_t i = 0; i < n; ++i) {
      row.labels[i] = static_cast<int>(uniform_int(rng, 0, static_cast<std::int64_t>(r) - 1));
      parts[static_cast<std::size_t>(row.labels[i])].push_back(i);
    }
    row.nonempty_parts = static_cast<std::size_t>(
        std::count_if(parts.begin(), parts.end(), [](const auto& b) { return !b.empty(); }));
    if (row.nonempty_parts != r) return;
    const auto cert = common_point(config, parts);
    row.is_tverberg = cert.has_value();
    if (!row.is_tverberg) return;
    // Deleting a point outside the certificate support changes nothing.
    row.is_max_degree = true;
    for (std::size_t x : cert->support) {
      auto reduced = parts;
      auto& b = reduced[static_cast<std::size_t>(row.labels[x])];
      b.erase(std::find(b.begin(), b.end(), x));
      if (!common_point(config, reduced)) {
        row.is_max_degree = false;
        break;
      }
    }
  });

  for (const auto& row : result.log) result.successes += row.is_max_degree ? 1 : 0;
  result.frequency = static_cast<double>(result.successes) / static_cast<double>(trials);
  return result;
}

void write_mc_log(std::ostream& out, const McResult& result) {
  out << "trial,label_vector,nonempty_parts,is_tverberg,is_max_degree\n";
  for (const auto& row : result.log) {
    out << row.trial << ",\"";
    for (std::size_t i = 0; i < row.labels.size(); ++i) {
      if (i) out << ',';
      out << row.labels[i];
    }
    out << "\"," << row.nonempty_parts << ',' << (row.is_tverberg ? 1 : 0) << ',' << (row.is_max_degree ? 1 : 0)
        << '\n';
  }
}

nlohmann::ordered_json mc_summary_json(const McResult& result) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["n"] = result.n;
  j["d"] = result.d;
  j["r"] = result.r;
  j["trials"] = result.trials;
  j["successes"] = result.successes;
  j["frequency"] = result.frequency;
  j["bound"] = result.bound;
  j["seed"] = result.seed;
  j["generator"] = kGeneratorId;
  return j;
}

double probability_lower_bound(std::size_t n, std::size_t r, std::size_t d) {
  if (n <= r) throw TvgError(Errc::InvalidArguments, "the bound needs n > r");
  const long double k = static_cast<long double>((r - 1) * (d + 1));
  const long double nn = static_cast<long double>(n), rr = static_cast<long double>(r);
  const long double exponent =
      k * std::log(rr) + k * std::log(nn) - 2.0L * (nn - rr) * (nn - rr) / (nn * rr * rr);
  return static_cast<double>(1.0L - std::exp(exponent));
}

TolerancePointBounds tolerance_point_bounds(std::size_t d, std::size_t t, std::size_t r) {
  if (d < 1 || r < 1) throw TvgError(Errc::InvalidArguments, "need d, r >= 1");
  if (d > 62) throw TvgError(Errc::InvalidArguments, "dimension too large");
  TolerancePointBounds b;
  b.general = static_cast<std::uint64_t>((t + 1) * (r - 1) * (d + 1) + 1);
  b.low_dim = (std::uint64_t{1} << (d - 1)) * static_cast<std::uint64_t>(r * (t + 2) - 1);
  return b;
}

#define TVG_INSTANTIATE_SARKARIA(F)                                                                     \
  template LiftedConfig<F> sarkaria_lift(const PointConfig<F>&, std::size_t);                            \
  template bool tverberg_via_lift(const LiftedConfig<F>&, const std::vector<int>&);                      \
  template bool lift_blocks_contain_origin(const LiftedConfig<F>&);                                      \
  template McResult mc_max_degree_probability(const PointConfig<F>&, std::size_t, std::uint64_t,        \
                                              std::uint64_t, unsigned);

TVG_INSTANTIATE_SARKARIA(Rational)
TVG_INSTANTIATE_SARKARIA(Cyclotomic)

}  // namespace tvg
