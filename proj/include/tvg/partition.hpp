#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvg/rational.hpp"

namespace tvg {

/// A set partition of {0, ..., n-1} into nonempty parts, stored as its
/// restricted-growth string: element 0 is in part 0 and every new part index
/// first appears as one more than the largest index seen so far.  Two
/// partitions are equal iff their strings are equal.
class Partition {
 public:
  using Label = std::uint8_t;

  Partition() = default;

  /// Canonicalizes arbitrary labels (any integers; equal labels share a part).
  static Partition from_labels(std::span<const int> labels);
  /// Parses "0,0,1,0,2"; the labels are canonicalized.
  static Partition parse(std::string_view text);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t parts() const noexcept { return parts_; }
  std::size_t part_of(std::size_t element) const { return labels_.at(element); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<std::size_t> part_sizes() const;

  /// True when the element's part has at least two elements.
  bool can_move(std::size_t element) const;
  /// The partition obtained by moving `element` into part `target`.
  /// Throws InvalidArguments when that would empty a part or is not a move.
  Partition moved(std::size_t element, std::size_t target) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<Label> labels_;
  std::size_t parts_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Lexicographic stream of the r-partitions of an n-set (restricted-growth order).
class PartitionEnumerator {
 public:
  /// Throws InvalidArguments unless 1 <= r <= n.
  PartitionEnumerator(std::size_t n, std::size_t r);
  std::optional<Partition> next();

 private:
  std::size_t n_;
  std::size_t r_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> enumerate_r_partitions(std::size_t n, std::size_t r);

/// Regnier distance: n minus the maximum total overlap over part matchings.
std::size_t partition_distance(const Partition& p, const Partition& q);

/// match[i] = part of q assigned to part i of p under a maximum-overlap
/// matching (Hungarian method).  Parts beyond q.parts() map to indices >= q.parts().
std::vector<std::size_t> optimal_part_matching(const Partition& p, const Partition& q);

Integer binomial(std::size_t n, std::size_t k);
Integer stirling2(std::size_t n, std::size_t r);
/// Partitions of an n-set into r blocks of size at least 2.
Integer stirling2_assoc(std::size_t n, std::size_t r);

struct EdgeCount {
  Integer value;
  /// Set when 2r > n and the count came from enumeration instead of the closed form.
  bool hypothesis_violated = false;
};

/// Edge count of the abstract partition graph G[n, r].
EdgeCount abstract_edge_count(std::size_t n, std::size_t r);
/// Half the degree sum grouped by number of singleton parts, for any r <= n.
Integer abstract_edge_count_closed_form(std::size_t n, std::size_t r);
std::size_t abstract_diameter(std::size_t n, std::size_t r);
/// Number of r-partitions at distance one: sum over non-singleton parts of |P_i| (r - 1).
std::size_t abstract_degree(const Partition& p);

}  // namespace tvg
