#include "tvg/tverberg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "tvg/lp.hpp"
#include "tvg/predicates.hpp"

namespace tvg {

namespace {

void check_ground_set(std::size_t config_size, const Partition& p) {
  if (p.size() != config_size) {
    throw TvgError(Errc::PartitionMismatch, "partition of " + std::to_string(p.size()) + " elements for a config of " +
                                                std::to_string(config_size) + " points");
  }
}

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

std::vector<std::vector<std::size_t>> without_point(std::vector<std::vector<std::size_t>> blocks, std::size_t x) {
  for (auto& b : blocks) b.erase(std::remove(b.begin(), b.end(), x), b.end());
  return blocks;
}

bool face_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

template <ExactField F>
std::optional<TverbergCertificate<F>> common_point(const PointConfig<F>& config,
                                                   const std::vector<std::vector<std::size_t>>& parts) {
  const std::size_t k = parts.size();
  const std::size_t d = config.dim();
  if (k == 0) return std::nullopt;
  std::vector<std::size_t> var_point;
  std::vector<std::size_t> var_part;
  for (std::size_t j = 0; j < k; ++j) {
    if (parts[j].empty()) return std::nullopt;
    for (std::size_t i : parts[j]) {
      config.at(i);
      var_point.push_back(i);
      var_part.push_back(j);
    }
  }
  // Rows: one normalization per part, then d rows per part j >= 1 stating
  // (weighted sum of part 0) - (weighted sum of part j) = 0.
  const std::size_t rows = k + d * (k - 1);
  Matrix<F> a(rows, var_point.size());
  std::vector<F> b(rows, F(0));
  for (std::size_t j = 0; j < k; ++j) b[j] = F(1);
  for (std::size_t v = 0; v < var_point.size(); ++v) {
    const std::size_t j = var_part[v];
    const auto& pt = config[var_point[v]];
    a(j, v) = F(1);
    if (j == 0) {
      for (std::size_t jj = 1; jj < k; ++jj) {
        for (std::size_t c = 0; c < d; ++c) a(k + (jj - 1) * d + c, v) = pt[c];
      }
    } else {
      for (std::size_t c = 0; c < d; ++c) a(k + (j - 1) * d + c, v) = -pt[c];
    }
  }
  auto lp = lp_feasible(a, b);
  if (!lp.feasible()) return std::nullopt;

  TverbergCertificate<F> cert;
  cert.witness.assign(d, F(0));
  for (const auto& [v, value] : lp.basic_solution) {
    const std::size_t i = var_point[v];
    cert.coefficients.emplace(i, value);
    cert.support.push_back(i);
    if (var_part[v] == 0) {
      for (std::size_t c = 0; c < d; ++c) cert.witness[c] += value * config[i][c];
    }
  }
  std::sort(cert.support.begin(), cert.support.end());
  return cert;
}

template <ExactField F>
std::optional<TverbergCertificate<F>> is_tverberg(const PointConfig<F>& config, const Partition& p) {
  check_ground_set(config.size(), p);
  return common_point(config, p.blocks());
}

template <ExactField F>
bool certificate_valid(const PointConfig<F>& config, const Partition& p, const TverbergCertificate<F>& cert) {
  if (p.size() != config.size() || cert.witness.size() != config.dim()) return false;
  std::vector<F> sums(p.parts(), F(0));
  std::vector<std::vector<F>> points(p.parts(), std::vector<F>(config.dim(), F(0)));
  for (const auto& [i, c] : cert.coefficients) {
    if (i >= config.size() || sign_of(c) <= 0) return false;
    const std::size_t j = p.part_of(i);
    sums[j] += c;
    for (std::size_t k = 0; k < config.dim(); ++k) points[j][k] += c * config[i][k];
  }
  for (std::size_t j = 0; j < p.parts(); ++j) {
    if (!(sums[j] == F(1)) || !(points[j] == cert.witness)) return false;
  }
  std::vector<std::size_t> keys;
  for (const auto& entry : cert.coefficients) keys.push_back(entry.first);
  return keys == cert.support;
}

template <ExactField F>
nlohmann::ordered_json certificate_to_json(const TverbergCertificate<F>& cert) {
  nlohmann::ordered_json j;
  auto witness = nlohmann::ordered_json::array();
  for (const auto& x : cert.witness) witness.push_back(to_string(x));
  j["witness"] = witness;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [i, c] : cert.coefficients) coeffs[std::to_string(i)] = to_string(c);
  j["coefficients"] = coeffs;
  j["support"] = cert.support;
  return j;
}

template <ExactField F>
std::pair<std::vector<std::size_t>, Partition> por_reduction(const PointConfig<F>& config, const Partition& p) {
  auto cert = is_tverberg(config, p);
  if (!cert) throw TvgError(Errc::NotTverberg, "partition " + p.to_string() + " is not Tverberg");
  std::vector<int> labels;
  for (std::size_t i : cert->support) labels.push_back(static_cast<int>(p.part_of(i)));
  return {cert->support, Partition::from_labels(labels)};
}

template <ExactField F>
PointConfig<F> restrict_config(const PointConfig<F>& config, const std::vector<std::size_t>& indices) {
  std::vector<std::vector<F>> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(config.at(i));
  return PointConfig<F>(config.dim(), std::move(pts));
}

// ---------------------------------------------------------------------------

std::size_t MoveTable::degree() const {
  std::size_t count = 0;
  for (const auto& row : valid) count += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  return count;
}

bool MoveTable::essential(std::size_t x) const {
  const auto& row = valid.at(x);
  return std::none_of(row.begin(), row.end(), [](bool b) { return b; });
}

std::vector<std::size_t> MoveTable::essential_points() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < valid.size(); ++x) {
    if (essential(x)) out.push_back(x);
  }
  return out;
}

template <ExactField F>
MoveTable essential_points(const PointConfig<F>& config, const Partition& p) {
  const auto cert = is_tverberg(config, p);
  if (!cert) throw TvgError(Errc::NotTverberg, "partition " + p.to_string() + " is not Tverberg");
  const std::size_t n = p.size();
  const std::size_t r = p.parts();
  MoveTable table;
  table.valid.assign(n, std::vector<bool>(r, false));
  const auto blocks = p.blocks();
  std::vector<bool> in_support(n, false);
  for (std::size_t i : cert->support) in_support[i] = true;

  for (std::size_t x = 0; x < n; ++x) {
    if (!p.can_move(x)) continue;
    const std::size_t own = p.part_of(x);
    // A point outside the support can go anywhere: the certificate still holds.
    bool all_valid = !in_support[x];
    // If the hulls meet without x, adding x to any part keeps them meeting.
    if (!all_valid && r >= 3) all_valid = common_point(config, without_point(blocks, x)).has_value();
    for (std::size_t k = 0; k < r; ++k) {
      if (k == own) continue;
      table.valid[x][k] = all_valid || is_tverberg(config, p.moved(x, k)).has_value();
    }
  }
  return table;
}

template <ExactField F>
std::size_t tverberg_degree(const PointConfig<F>& config, const Partition& p) {
  return essential_points(config, p).degree();
}

template <ExactField F>
bool tolerance_check(const PointConfig<F>& config, const Partition& p, std::size_t t) {
  check_ground_set(config.size(), p);
  const auto blocks = p.blocks();
  if (t == 0) return common_point(config, blocks).has_value();
  const std::size_t n = p.size();
  if (t >= n) return false;
  // Deleting more points only shrinks hulls, so subsets of size exactly t suffice.
  std::vector<std::size_t> removed(t);
  std::iota(removed.begin(), removed.end(), std::size_t{0});
  do {
    auto parts = blocks;
    for (auto& b : parts) {
      b.erase(std::remove_if(b.begin(), b.end(),
                             [&](std::size_t i) { return std::binary_search(removed.begin(), removed.end(), i); }),
              b.end());
    }
    if (!common_point(config, parts)) return false;
  } while (next_subset(removed, n));
  return true;
}

// ---------------------------------------------------------------------------

NerveClass classify_faces(std::size_t r, std::vector<std::uint32_t> faces) {
  if (r == 0 || r > 8) throw TvgError(Errc::InvalidArguments, "nerve classification supports 1 <= r <= 8");
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  NerveClass nc;
  nc.r = r;
  nc.faces = faces;

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  bool first = true;
  do {
    std::vector<std::uint32_t> mapped;
    mapped.reserve(faces.size());
    for (std::uint32_t f : faces) {
      std::uint32_t g = 0;
      for (std::size_t b = 0; b < r; ++b) {
        if (f & (1u << b)) g |= 1u << perm[b];
      }
      mapped.push_back(g);
    }
    std::sort(mapped.begin(), mapped.end(), face_less);
    if (first || std::lexicographical_compare(mapped.begin(), mapped.end(), nc.canonical_faces.begin(),
                                              nc.canonical_faces.end(), face_less)) {
      nc.canonical_faces = std::move(mapped);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (r == 3) {
    const bool filled = std::find(faces.begin(), faces.end(), 0b111u) != faces.end();
    nc.iso_class = filled ? 4 : static_cast<int>(std::count_if(faces.begin(), faces.end(), [](std::uint32_t f) {
      return std::popcount(f) == 2;
    }));
  }
  return nc;
}

template <ExactField F>
NerveClass nerve(const PointConfig<F>& config, const Partition& p) {
  check_ground_set(config.size(), p);
  const std::size_t r = p.parts();
  if (r > 8) throw TvgError(Errc::InvalidArguments, "nerve classification supports r <= 8");
  const auto blocks = p.blocks();
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << r); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) { return face_less(b, a); });

  std::vector<std::uint32_t> faces;
  for (std::uint32_t m : masks) {
    bool face = std::popcount(m) == 1 ||
                std::any_of(faces.begin(), faces.end(), [m](std::uint32_t f) { return (f & m) == m; });
    if (!face) {
      std::vector<std::vector<std::size_t>> parts;
      for (std::size_t b = 0; b < r; ++b) {
        if (m & (1u << b)) parts.push_back(blocks[b]);
      }
      face = common_point(config, parts).has_value();
    }
    if (face) faces.push_back(m);
  }
  return classify_faces(r, std::move(faces));
}

template <ExactField F>
std::vector<Partition> radon_partitions_via_kernel(const PointConfig<F>& config) {
  const std::size_t n = config.size();
  if (n < 2) return {};
  const auto kernel = affine_dependence_kernel(config);
  if (kernel.empty()) return {};
  std::set<Partition> found;
  if (kernel.size() == 1) {
    const auto& alpha = kernel.front();
    std::vector<int> labels(n, 0);
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = sign_of(alpha[i]);
      if (s == 0) zeros.push_back(i);
      labels[i] = s < 0 ? 1 : 0;
    }
    if (zeros.size() >= 63) throw TvgError(Errc::TooManyPartitions, "too many zero-coefficient points");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << zeros.size()); ++bits) {
      for (std::size_t z = 0; z < zeros.size(); ++z) labels[zeros[z]] = static_cast<int>((bits >> z) & 1);
      found.insert(Partition::from_labels(labels));
    }
  } else {
    PartitionEnumerator e(n, 2);
    while (auto p = e.next()) {
      if (is_tverberg(config, *p)) found.insert(*p);
    }
  }
  return {found.begin(), found.end()};
}

#define TVG_INSTANTIATE_TVERBERG(F)                                                                         \
  template std::optional<TverbergCertificate<F>> common_point(const PointConfig<F>&,                          \
                                                              const std::vector<std::vector<std::size_t>>&); \
  template std::optional<TverbergCertificate<F>> is_tverberg(const PointConfig<F>&, const Partition&);       \
  template bool certificate_valid(const PointConfig<F>&, const Partition&, const TverbergCertificate<F>&);   \
  template nlohmann::ordered_json certificate_to_json(const TverbergCertificate<F>&);                        \
  template std::pair<std::vector<std::size_t>, Partition> por_reduction(const PointConfig<F>&,               \
                                                                        const Partition&);                   \
  template PointConfig<F> restrict_config(const PointConfig<F>&, const std::vector<std::size_t>&);           \
  template MoveTable essential_points(const PointConfig<F>&, const Partition&);                              \
  template std::size_t tverberg_degree(const PointConfig<F>&, const Partition&);                             \
  template bool tolerance_check(const PointConfig<F>&, const Partition&, std::size_t);                       \
  template NerveClass nerve(const PointConfig<F>&, const Partition&);                                        \
  template std::vector<Partition> radon_partitions_via_kernel(const PointConfig<F>&);

TVG_INSTANTIATE_TVERBERG(Rational)
TVG_INSTANTIATE_TVERBERG(Cyclotomic)

}  // namespace tvg
