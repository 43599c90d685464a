#include "tvg/paths.hpp"

#include <algorithm>

namespace tvg {

namespace {

// Signed dependence: +coefficient on part 0, -coefficient on part 1.
template <ExactField F>
std::vector<F> dependence_from(const PointConfig<F>& config, const Partition& p) {
  if (p.parts() != 2) throw TvgError(Errc::NotRadon, "partition " + p.to_string() + " does not have two parts");
  auto cert = is_tverberg(config, p);
  if (!cert) throw TvgError(Errc::NotRadon, "partition " + p.to_string() + " is not Radon");
  std::vector<F> alpha(p.size(), F(0));
  for (const auto& [i, c] : cert->coefficients) alpha[i] = p.part_of(i) == 0 ? c : F(-c);
  return alpha;
}

// Appends the partition for `labels` unless it equals the last path entry.
void push_step(std::vector<Partition>& path, const std::vector<int>& labels) {
  Partition next = Partition::from_labels(labels);
  if (path.empty() || path.back() != next) path.push_back(std::move(next));
}

}  // namespace

template <ExactField F>
std::vector<Partition> radon_path(const PointConfig<F>& config, const Partition& p, const Partition& q) {
  if (p.size() != config.size() || q.size() != config.size()) {
    throw TvgError(Errc::PartitionMismatch, "partition size differs from the config");
  }
  const std::vector<F> alpha = dependence_from(config, p);
  std::vector<F> beta = dependence_from(config, q);
  if (p == q) return {p};
  const std::size_t n = p.size();

  // theta(t) must not vanish on [0, 1]; that only happens when beta is a
  // negative multiple of alpha, and negating beta (swapping the sides of q)
  // fixes it.
  std::vector<int> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<int>(q.part_of(i));
  {
    std::size_t k = 0;
    while (is_zero(alpha[k])) ++k;
    const F c = beta[k] / alpha[k];
    bool proportional = sign_of(c) < 0;
    for (std::size_t i = 0; proportional && i < n; ++i) proportional = beta[i] == c * alpha[i];
    if (proportional) {
      for (auto& b : beta) b = -b;
      for (auto& t : target) t = 1 - t;
    }
  }

  // Event times: 0, 1, and every crossing alpha_i / (alpha_i - beta_i) in (0, 1).
  std::vector<F> events{F(0), F(1)};
  for (std::size_t i = 0; i < n; ++i) {
    const F diff = alpha[i] - beta[i];
    if (is_zero(diff)) continue;
    const F t = alpha[i] / diff;
    if (sign_of(t) > 0 && sign_of(F(t - F(1))) < 0) events.push_back(t);
  }
  std::sort(events.begin(), events.end(), [](const F& a, const F& b) { return less(a, b); });
  events.erase(std::unique(events.begin(), events.end()), events.end());

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(p.part_of(i));
  std::vector<Partition> path{p};

  for (const F& t : events) {
    const bool at_end = sign_of(F(t - F(1))) == 0;
    for (std::size_t i = 0; i < n; ++i) {
      const F theta = (F(1) - t) * alpha[i] + t * beta[i];
      if (!is_zero(theta)) continue;
      int side;
      if (at_end) {
        side = target[i];
      } else {
        // Sign just after t is the sign of the slope beta_i - alpha_i.
        const int slope = sign_of(F(beta[i] - alpha[i]));
        if (slope == 0) continue;
        side = slope > 0 ? 0 : 1;
      }
      if (labels[i] != side) {
        labels[i] = side;
        push_step(path, labels);
      }
    }
  }
  if (path.back() != q) throw std::logic_error("radon_path did not reach its target");
  return path;
}

namespace {

// Moves from p to q when the certificate supports sp and sq are disjoint:
// first every point outside sp goes to its q-part (the p-certificate
// survives), then the points of sp (the q-certificate survives).
std::vector<Partition> disjoint_support_path(const Partition& p, const std::vector<std::size_t>& sp,
                                             const Partition& q) {
  const std::size_t n = p.size();
  const auto match = optimal_part_matching(q, p);  // q-part -> p-part label
  std::vector<int> labels(n), target(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(p.part_of(i));
    target[i] = static_cast<int>(match[q.part_of(i)]);
  }
  std::vector<bool> in_sp(n, false);
  for (std::size_t i : sp) in_sp[i] = true;
  std::vector<Partition> path{p};
  for (int phase = 0; phase < 2; ++phase) {
    for (std::size_t i = 0; i < n; ++i) {
      if (in_sp[i] != (phase == 1) || labels[i] == target[i]) continue;
      labels[i] = target[i];
      push_step(path, labels);
    }
  }
  return path;
}

void append_path(std::vector<Partition>& path, const std::vector<Partition>& more) {
  for (const auto& p : more) {
    if (path.empty() || path.back() != p) path.push_back(p);
  }
}

}  // namespace

template <ExactField F>
std::vector<Partition> tverberg_path(const PointConfig<F>& config, const Partition& p, const Partition& q,
                                     const TverbergPathOptions& options) {
  const std::size_t n = config.size();
  if (p.size() != n || q.size() != n) throw TvgError(Errc::PartitionMismatch, "partition size differs from the config");
  if (p.parts() != q.parts()) throw TvgError(Errc::PartitionMismatch, "partitions have different part counts");
  const std::size_t r = p.parts();
  const std::size_t tv = tverberg_number(config.dim(), r);
  if (!options.best_effort && n + 1 < 3 * tv) {
    throw TvgError(Errc::TooFewPoints, "the construction needs at least 3 Tv(d,r) - 1 = " +
                                           std::to_string(3 * tv - 1) + " points");
  }
  const auto cp = is_tverberg(config, p);
  if (!cp) throw TvgError(Errc::NotTverberg, "partition " + p.to_string() + " is not Tverberg");
  const auto cq = is_tverberg(config, q);
  if (!cq) throw TvgError(Errc::NotTverberg, "partition " + q.to_string() + " is not Tverberg");
  if (p == q) return {p};

  const auto& sp = cp->support;
  const auto& sq = cq->support;
  std::vector<std::size_t> shared;
  std::set_intersection(sp.begin(), sp.end(), sq.begin(), sq.end(), std::back_inserter(shared));
  if (shared.empty()) return disjoint_support_path(p, sp, q);

  // Route through a partition whose support avoids both supports.
  std::vector<bool> used(n, false);
  for (std::size_t i : sp) used[i] = true;
  for (std::size_t i : sq) used[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!used[i]) rest.push_back(i);
  }
  if (rest.size() < r) throw TvgError(Errc::NoPathFound, "too few points outside both supports");
  if (rest.size() > tv) rest.resize(tv);
  const PointConfig<F> sub = restrict_config(config, rest);
  std::optional<Partition> inner;
  std::vector<std::size_t> inner_support;
  PartitionEnumerator e(rest.size(), r);
  while (auto candidate = e.next()) {
    if (auto cert = is_tverberg(sub, *candidate)) {
      inner = *candidate;
      for (std::size_t i : cert->support) inner_support.push_back(rest[i]);
      break;
    }
  }
  if (!inner) throw TvgError(Errc::NoPathFound, "no Tverberg partition outside both supports");
  std::vector<int> labels(n, 0);  // leftover points join the first part
  for (std::size_t k = 0; k < rest.size(); ++k) labels[rest[k]] = static_cast<int>(inner->part_of(k));
  const Partition mid = Partition::from_labels(labels);

  std::vector<Partition> path = disjoint_support_path(p, sp, mid);
  append_path(path, disjoint_support_path(mid, inner_support, q));
  return path;
}

template <ExactField F>
PathCheck validate_path(const PointConfig<F>& config, const std::vector<Partition>& path, const Partition& p,
                        const Partition& q) {
  PathCheck check;
  check.step_ok.assign(path.size(), true);
  if (path.empty() || path.front() != p || path.back() != q) {
    check.ok = false;
    check.message = "endpoints do not match";
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    bool good = path[i].size() == config.size() && path[i].parts() == p.parts() &&
                is_tverberg(config, path[i]).has_value();
    if (good && i > 0) good = partition_distance(path[i - 1], path[i]) == 1;
    if (!good) {
      check.step_ok[i] = false;
      if (check.ok) check.message = "step " + std::to_string(i) + " fails";
      check.ok = false;
    }
  }
  return check;
}

#define TVG_INSTANTIATE_PATHS(F)                                                                              \
  template std::vector<Partition> radon_path(const PointConfig<F>&, const Partition&, const Partition&);      \
  template std::vector<Partition> tverberg_path(const PointConfig<F>&, const Partition&, const Partition&,    \
                                                const TverbergPathOptions&);                                  \
  template PathCheck validate_path(const PointConfig<F>&, const std::vector<Partition>&, const Partition&,    \
                                   const Partition&);

TVG_INSTANTIATE_PATHS(Rational)
TVG_INSTANTIATE_PATHS(Cyclotomic)

}  // namespace tvg
