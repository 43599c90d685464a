#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tvg/generators.hpp"
#include "tvg/predicates.hpp"
#include "tvg/tverberg.hpp"
#include "tvg/tverberg_graph.hpp"

using namespace tvg;

namespace {

Partition P(std::initializer_list<int> labels) {
  const std::vector<int> v(labels);
  return Partition::from_labels(v);
}

// Moves checked one by one with is_tverberg.
std::size_t brute_degree(const PointConfig<Rational>& cfg, const Partition& p) {
  std::size_t deg = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!p.can_move(x)) continue;
    for (std::size_t k = 0; k < p.parts(); ++k) {
      if (k != p.part_of(x) && is_tverberg(cfg, p.moved(x, k))) ++deg;
    }
  }
  return deg;
}

bool deletion_survives(const PointConfig<Rational>& cfg, const Partition& p, std::size_t x) {
  auto blocks = p.blocks();
  auto& b = blocks[p.part_of(x)];
  b.erase(std::find(b.begin(), b.end(), x));
  return common_point(cfg, blocks).has_value();
}

}  // namespace

TEST_CASE("is_tverberg examples") {
  auto four = th::rational_config(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}});
  auto cert = is_tverberg(four, P({0, 1, 1, 0}));
  REQUIRE(cert.has_value());
  CHECK(cert->witness == std::vector<Rational>{1, 1});
  CHECK(oracle::replay(four, P({0, 1, 1, 0}), *cert));
  CHECK_FALSE(is_tverberg(four, P({0, 0, 1, 1})).has_value());
  CHECK_FALSE(oracle::radon_by_clipping(four, P({0, 0, 1, 1})));

  auto line = th::rational_config(1, {{0}, {1}, {2}});
  auto mid = is_tverberg(line, P({0, 1, 0}));
  REQUIRE(mid.has_value());
  CHECK(mid->witness == std::vector<Rational>{1});

  CHECK_THROWS_AS(is_tverberg(four, P({0, 1, 0})), TvgError);
}

TEST_CASE("certificate JSON uses exact strings") {
  auto four = th::rational_config(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}});
  auto cert = is_tverberg(four, P({0, 1, 1, 0}));
  REQUIRE(cert.has_value());
  auto j = certificate_to_json(*cert);
  CHECK(j["witness"] == nlohmann::json::array({"1", "1"}));
  CHECK(j["support"].size() == cert->support.size());
  CHECK(j["coefficients"]["1"] == "1/2");
}

TEST_CASE("is_tverberg agrees with clipping on every 2-partition of 200 configurations") {
  std::mt19937_64 rng(4242);
  std::size_t agree = 0, radon = 0;
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    auto cfg = th::small_grid_config(n, 2, it % 3 == 0 ? 2 : 50, rng);
    for (const auto& p : enumerate_r_partitions(n, 2)) {
      auto cert = is_tverberg(cfg, p);
      const bool clip = oracle::radon_by_clipping(cfg, p);
      CHECK(cert.has_value() == clip);
      agree += cert.has_value() == clip;
      if (cert) {
        ++radon;
        CHECK(oracle::replay(cfg, p, *cert));
        CHECK(certificate_valid(cfg, p, *cert));
      }
    }
  }
  CHECK(radon > 1000);
}

TEST_CASE("certificates replay and obey the support bound") {
  std::mt19937_64 rng(77);
  std::size_t found = 0;
  for (int it = 0; it < 150; ++it) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    const std::size_t r = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    const std::size_t tv = tverberg_number(d, r);
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, static_cast<std::int64_t>(r), tv + 4));
    auto cfg = th::small_grid_config(n, d, 6, rng);
    for (int k = 0; k < 20; ++k) {
      auto p = th::random_partition(n, r, rng);
      auto cert = is_tverberg(cfg, p);
      if (!cert) continue;
      ++found;
      CHECK(oracle::replay(cfg, p, *cert));
      CHECK(cert->support.size() <= tv);
      auto [support, restricted] = por_reduction(cfg, p);
      CHECK(support == cert->support);
      CHECK(restricted.parts() == r);
      CHECK(is_tverberg(restrict_config(cfg, support), restricted).has_value());
    }
  }
  CHECK(found > 300);
}

TEST_CASE("Por reduction examples") {
  auto line = th::rational_config(1, {{0}, {1}, {2}, {3}, {4}});
  auto [support, restricted] = por_reduction(line, P({0, 1, 1, 1, 0}));
  CHECK(support.size() <= 3);
  CHECK(restricted.parts() == 2);

  auto seven = random_uniform(7, 2, 3);
  bool tested = false;
  for (const auto& p : enumerate_r_partitions(7, 2)) {
    if (!is_tverberg(seven, p)) continue;
    auto [s, rp] = por_reduction(seven, p);
    CHECK(s.size() <= 4);
    tested = true;
  }
  CHECK(tested);

  auto tri = th::rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(por_reduction(tri, P({0, 0, 1})), TvgError);
}

TEST_CASE("move table matches brute force moves") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 60; ++it) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const std::size_t r = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const std::size_t n = tverberg_number(d, r) + static_cast<std::size_t>(uniform_int(rng, 0, 3));
    auto cfg = th::small_grid_config(n, d, it % 2 ? 3 : 40, rng);
    for (int k = 0; k < 10; ++k) {
      auto p = th::random_partition(n, r, rng);
      if (!is_tverberg(cfg, p)) continue;
      auto table = essential_points(cfg, p);
      std::size_t invalid = 0;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t t = 0; t < r; ++t) {
          if (t == p.part_of(x)) {
            CHECK_FALSE(table.valid[x][t]);
            continue;
          }
          const bool brute = p.can_move(x) && is_tverberg(cfg, p.moved(x, t)).has_value();
          CHECK(table.valid[x][t] == brute);
          invalid += !brute;
        }
      }
      CHECK(table.degree() == n * (r - 1) - invalid);
      CHECK(tverberg_degree(cfg, p) == table.degree());
    }
  }
  auto tri = th::rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(essential_points(tri, P({0, 0, 1})), TvgError);
}

TEST_CASE("five points in convex position with exactly three essential points") {
  // w = 0, v1 = 1, v2 = 4: the line v1 v2 cuts w off from the rest.
  auto five = th::rational_config(2, {{0, 3}, {3, 1}, {2, -2}, {-2, -2}, {-3, 1}});
  auto p = P({0, 1, 0, 0, 1});
  REQUIRE(oracle::radon_by_clipping(five, p));
  auto table = essential_points(five, p);
  CHECK(table.essential_points() == std::vector<std::size_t>{0, 1, 4});
  CHECK(table.degree() == 2);
  CHECK(brute_degree(five, p) == 2);
}

TEST_CASE("degree bounds on random configurations") {
  std::mt19937_64 rng(555);
  const std::vector<std::pair<std::size_t, std::size_t>> dr = {{1, 2}, {2, 2}, {2, 3}};
  for (int it = 0; it < 60; ++it) {
    const auto [d, r] = dr[static_cast<std::size_t>(it) % 3];
    const std::size_t tv = tverberg_number(d, r);
    const std::size_t n = tv + static_cast<std::size_t>(uniform_int(rng, 1, d == 2 && r == 3 ? 1 : 3));
    auto cfg = random_uniform(n, d, static_cast<std::uint64_t>(it) + 100);
    auto g = build_graph(cfg, r);
    for (std::size_t v = 0; v < g.graph.vertices.size(); ++v) {
      const auto deg = g.degree(v);
      CHECK(deg >= (n + 1 - tv) * (r - 1));
      CHECK(deg <= n * (r - 1));
    }
  }
}

TEST_CASE("surviving every deletion implies every move is valid") {
  std::mt19937_64 rng(8080);
  std::size_t full = 0;
  for (int it = 0; it < 80; ++it) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const std::size_t r = static_cast<std::size_t>(uniform_int(rng, 2, 3));
    const std::size_t n = 2 * tverberg_number(d, r) + 2;
    auto cfg = random_uniform(n, d, static_cast<std::uint64_t>(it));
    for (int k = 0; k < 10; ++k) {
      auto p = th::random_partition(n, r, rng);
      if (!is_tverberg(cfg, p)) continue;
      bool all = true;
      for (std::size_t x = 0; x < n && all; ++x) all = deletion_survives(cfg, p, x);
      if (!all) continue;
      ++full;
      CHECK(tverberg_degree(cfg, p) == n * (r - 1));
      CHECK(brute_degree(cfg, p) == n * (r - 1));
      CHECK(tolerance_check(cfg, p, 1));
    }
  }
  CHECK(full > 10);
}

TEST_CASE("tolerance") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const std::size_t r = 2;
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 3, 9));
    auto cfg = th::small_grid_config(n, d, 5, rng);
    auto p = th::random_partition(n, r, rng);
    CHECK(tolerance_check(cfg, p, 0) == is_tverberg(cfg, p).has_value());
    bool prev = tolerance_check(cfg, p, 0);
    for (std::size_t t = 1; t <= 3; ++t) {
      const bool cur = tolerance_check(cfg, p, t);
      if (cur) CHECK(prev);
      if (cur && t == 1) CHECK(tverberg_degree(cfg, p) == n * (r - 1));
      prev = cur;
    }
    CHECK_FALSE(tolerance_check(cfg, p, n));
  }
}

TEST_CASE("nerve examples") {
  auto seven = random_uniform(7, 2, 1);
  bool seen = false;
  for (const auto& p : enumerate_r_partitions(7, 3)) {
    if (!is_tverberg(seven, p)) continue;
    auto nc = nerve(seven, p);
    CHECK(nc.iso_class == 4);
    CHECK(nc.faces.size() == 7);
    seen = true;
  }
  CHECK(seen);

  auto far = th::rational_config(2, {{0, 0}, {1, 0}, {100, 0}, {101, 1}, {0, 100}, {1, 101}});
  auto nc = nerve(far, P({0, 0, 1, 1, 2, 2}));
  CHECK(nc.iso_class == 0);
  CHECK(nc.faces == std::vector<std::uint32_t>{1, 2, 4});

  // One crossing pair: parts 0 and 1 cross, part 2 far away.
  auto one = th::rational_config(2, {{0, 0}, {2, 2}, {0, 2}, {2, 0}, {50, 50}, {51, 50}});
  CHECK(nerve(one, P({0, 0, 1, 1, 2, 2})).iso_class == 1);
}

TEST_CASE("nerve classes are invariant under part relabeling") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = static_cast<std::size_t>(uniform_int(rng, 2, 4));
    // Random downward-closed face set containing all singletons.
    std::vector<std::uint32_t> faces;
    for (std::uint32_t m = 1; m < (1u << r); ++m) {
      if (std::popcount(m) == 1) {
        faces.push_back(m);
        continue;
      }
      bool closed = true;
      for (std::uint32_t b = 0; b < r; ++b) {
        if ((m >> b & 1) && std::find(faces.begin(), faces.end(), m & ~(1u << b)) == faces.end()) closed = false;
      }
      if (closed && uniform_int(rng, 0, 1)) faces.push_back(m);
    }
    auto base = classify_faces(r, faces);
    std::vector<std::uint32_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      std::vector<std::uint32_t> mapped;
      for (auto m : faces) {
        std::uint32_t out = 0;
        for (std::uint32_t b = 0; b < r; ++b) {
          if (m >> b & 1) out |= 1u << perm[b];
        }
        mapped.push_back(out);
      }
      auto other = classify_faces(r, mapped);
      CHECK(other.canonical_faces == base.canonical_faces);
      CHECK(other.iso_class == base.iso_class);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (r == 3) {
      std::size_t pairs = 0;
      bool triple = false;
      for (auto m : faces) {
        pairs += std::popcount(m) == 2;
        triple = triple || m == 7u;
      }
      CHECK(base.iso_class == (triple ? 4 : static_cast<int>(pairs)));
    }
  }
}

TEST_CASE("kernel Radon enumeration matches brute force") {
  auto four = th::rational_config(2, {{0, 0}, {5, 1}, {2, 7}, {1, 3}});
  CHECK(radon_partitions_via_kernel(four).size() == 1);

  auto line = th::rational_config(1, {{0}, {1}, {2}});
  CHECK(radon_partitions_via_kernel(line) == std::vector<Partition>{P({0, 1, 0})});

  auto collinear = th::rational_config(2, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(affine_dependence_kernel(collinear).size() == 2);

  std::mt19937_64 rng(19);
  for (int it = 0; it < 150; ++it) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 2));
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    auto cfg = th::small_grid_config(n, d, it % 2 ? 2 : 30, rng);
    std::vector<Partition> brute;
    for (const auto& p : enumerate_r_partitions(n, 2)) {
      if (is_tverberg(cfg, p)) brute.push_back(p);
    }
    auto via = radon_partitions_via_kernel(cfg);
    std::sort(via.begin(), via.end());
    CHECK(via == brute);
  }
  auto collinear_brute = std::vector<Partition>{};
  for (const auto& p : enumerate_r_partitions(4, 2)) {
    if (is_tverberg(collinear, p)) collinear_brute.push_back(p);
  }
  auto via = radon_partitions_via_kernel(collinear);
  std::sort(via.begin(), via.end());
  CHECK(via == collinear_brute);
}
