#include "tvg/partition.hpp"

#include <algorithm>
#include <limits>

#include "tvg/error.hpp"

namespace tvg {

Partition Partition::from_labels(std::span<const int> labels) {
  Partition p;
  p.labels_.reserve(labels.size());
  std::vector<std::pair<int, Label>> seen;
  for (int raw : labels) {
    auto it = std::find_if(seen.begin(), seen.end(), [raw](const auto& e) { return e.first == raw; });
    if (it == seen.end()) {
      if (seen.size() > std::numeric_limits<Label>::max()) {
        throw TvgError(Errc::InvalidArguments, "too many parts");
      }
      seen.emplace_back(raw, static_cast<Label>(seen.size()));
      it = seen.end() - 1;
    }
    p.labels_.push_back(it->second);
  }
  if (p.labels_.size() > std::numeric_limits<Label>::max()) {
    throw TvgError(Errc::InvalidArguments, "partitions are limited to 255 elements");
  }
  p.parts_ = seen.size();
  return p;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> labels;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view field = text.substr(pos, end - pos);
    if (field.empty() || field.size() > 3 ||
        !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw TvgError(Errc::ParseError, "malformed partition string '" + std::string(text) + "'");
    }
    labels.push_back(std::stoi(std::string(field)));
    pos = end + 1;
  }
  return from_labels(labels);
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
  std::vector<std::vector<std::size_t>> out(parts_);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
  return out;
}

std::vector<std::size_t> Partition::part_sizes() const {
  std::vector<std::size_t> out(parts_, 0);
  for (Label l : labels_) ++out[l];
  return out;
}

bool Partition::can_move(std::size_t element) const {
  const Label own = labels_.at(element);
  return std::count(labels_.begin(), labels_.end(), own) >= 2;
}

Partition Partition::moved(std::size_t element, std::size_t target) const {
  if (element >= labels_.size() || target >= parts_ || labels_[element] == target) {
    throw TvgError(Errc::InvalidArguments, "not a single-element move");
  }
  if (!can_move(element)) throw TvgError(Errc::InvalidArguments, "move would empty a part");
  std::vector<int> raw(labels_.begin(), labels_.end());
  raw[element] = static_cast<int>(target);
  return from_labels(raw);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto l : p.labels()) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------------------

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t r) : n_(n), r_(r) {
  if (r < 1 || r > n) throw TvgError(Errc::InvalidArguments, "need 1 <= r <= n");
  if (n > std::numeric_limits<Partition::Label>::max()) {
    throw TvgError(Errc::InvalidArguments, "partitions are limited to 255 elements");
  }
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    // Smallest string: zeros, then 1..r-1 in the last r-1 slots.
    current_.assign(n_, 0);
    for (std::size_t t = 0; t + 1 < r_; ++t) current_[n_ - r_ + 1 + t] = static_cast<int>(t + 1);
    return Partition::from_labels(current_);
  }
  std::vector<int> prefix_max(n_);
  prefix_max[0] = current_[0];
  for (std::size_t i = 1; i < n_; ++i) prefix_max[i] = std::max(prefix_max[i - 1], current_[i]);
  const int top = static_cast<int>(r_) - 1;
  for (std::size_t i = n_; i-- > 1;) {
    const int before = prefix_max[i - 1];
    const int v = current_[i] + 1;
    if (v > before + 1 || v > top) continue;
    const int new_max = std::max(before, v);
    const std::size_t remaining = n_ - 1 - i;
    const std::size_t missing = static_cast<std::size_t>(top - new_max);
    if (missing > remaining) continue;
    current_[i] = v;
    for (std::size_t j = i + 1; j < n_; ++j) current_[j] = 0;
    for (std::size_t t = 0; t < missing; ++t) current_[n_ - missing + t] = new_max + 1 + static_cast<int>(t);
    return Partition::from_labels(current_);
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Partition> enumerate_r_partitions(std::size_t n, std::size_t r) {
  std::vector<Partition> out;
  PartitionEnumerator e(n, r);
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Minimum-cost perfect assignment on a k x k matrix (Hungarian method with
// potentials).  Returns assignment[row] = column.
std::vector<std::size_t> hungarian_min_cost(const std::vector<std::vector<long>>& cost) {
  const std::size_t k = cost.size();
  const long inf = std::numeric_limits<long>::max() / 4;
  std::vector<long> u(k + 1, 0), v(k + 1, 0);
  std::vector<std::size_t> p(k + 1, 0), way(k + 1, 0);
  for (std::size_t i = 1; i <= k; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<long> minv(k + 1, inf);
    std::vector<bool> used(k + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      long delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> assignment(k);
  for (std::size_t j = 1; j <= k; ++j) {
    if (p[j] != 0) assignment[p[j] - 1] = j - 1;
  }
  return assignment;
}

std::vector<std::vector<long>> overlap_matrix(const Partition& p, const Partition& q) {
  const std::size_t k = std::max(p.parts(), q.parts());
  std::vector<std::vector<long>> overlap(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < p.size(); ++i) ++overlap[p.part_of(i)][q.part_of(i)];
  return overlap;
}

}  // namespace

std::vector<std::size_t> optimal_part_matching(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw TvgError(Errc::SizeMismatch, "partitions of different ground sets");
  auto cost = overlap_matrix(p, q);
  for (auto& row : cost) {
    for (auto& c : row) c = -c;
  }
  return hungarian_min_cost(cost);
}

std::size_t partition_distance(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw TvgError(Errc::SizeMismatch, "partitions of different ground sets");
  const auto overlap = overlap_matrix(p, q);
  const auto match = optimal_part_matching(p, q);
  long kept = 0;
  for (std::size_t i = 0; i < match.size(); ++i) kept += overlap[i][match[i]];
  return p.size() - static_cast<std::size_t>(kept);
}

// ---------------------------------------------------------------------------

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer stirling2(std::size_t n, std::size_t r) {
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<Integer> row(r + 1, Integer(0));
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, r); j >= 1; --j) row[j] = Integer(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[r];
}

Integer stirling2_assoc(std::size_t n, std::size_t r) {
  // S2(i, j) = j S2(i-1, j) + (i-1) S2(i-2, j-1)
  std::vector<std::vector<Integer>> t(n + 1, std::vector<Integer>(r + 1, Integer(0)));
  t[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      t[i][j] = Integer(j) * t[i - 1][j];
      if (i >= 2) t[i][j] += Integer(i - 1) * t[i - 2][j - 1];
    }
  }
  return t[n][r];
}

Integer abstract_edge_count_closed_form(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw TvgError(Errc::InvalidArguments, "need 1 <= r <= n");
  Integer twice = 0;
  for (std::size_t k = 0; k < r; ++k) {
    twice += binomial(n, k) * stirling2_assoc(n - k, r - k) * Integer(n - k) * Integer(r - 1);
  }
  return twice / 2;
}

EdgeCount abstract_edge_count(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw TvgError(Errc::InvalidArguments, "need 1 <= r <= n");
  if (2 * r <= n) return {abstract_edge_count_closed_form(n, r), false};
  Integer twice = 0;
  PartitionEnumerator e(n, r);
  while (auto p = e.next()) twice += abstract_degree(*p);
  return {twice / 2, true};
}

std::size_t abstract_diameter(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) throw TvgError(Errc::InvalidArguments, "need 1 <= r <= n");
  if (n + 2 <= 2 * r) return 2 * n - 2 * r;
  return n - (n + r - 1) / r;
}

std::size_t abstract_degree(const Partition& p) {
  std::size_t degree = 0;
  for (std::size_t s : p.part_sizes()) {
    if (s != 1) degree += s * (p.parts() - 1);
  }
  return degree;
}

}  // namespace tvg
