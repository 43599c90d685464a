#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "tvg/config_io.hpp"
#include "tvg/generators.hpp"
#include "tvg/predicates.hpp"
#include "tvg/tverberg.hpp"
#include "tvg/tverberg_graph.hpp"

using namespace tvg;

TEST_CASE("square is exact") {
  auto sq = regular_polygon(4);
  const std::vector<std::vector<long>> expect = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(sq[i][0] == Cyclotomic(expect[i][0]));
    CHECK(sq[i][1] == Cyclotomic(expect[i][1]));
  }
  CHECK_THROWS_AS(regular_polygon(2), TvgError);
}

TEST_CASE("polygon vertices lie on the unit circle and are in general position") {
  for (std::size_t n = 3; n <= 14; ++n) {
    auto poly = regular_polygon(n);
    Cyclotomic sx(0), sy(0);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(poly[i][0] * poly[i][0] + poly[i][1] * poly[i][1] == Cyclotomic(1));
      sx += poly[i][0];
      sy += poly[i][1];
      // Counterclockwise.
      const std::vector<std::size_t> three{i, (i + 1) % n, (i + 2) % n};
      CHECK(orientation(poly, three) == 1);
    }
    CHECK(sx.is_zero());
    CHECK(sy.is_zero());
    CHECK(in_general_position(poly));
  }
}

TEST_CASE("hexagon main diagonals meet at the center") {
  auto hex = regular_polygon(6);
  for (std::size_t k = 0; k < 3; ++k) {
    // The center is the midpoint of vertices k and k + 3.
    CHECK((hex[k][0] + hex[k + 3][0]).is_zero());
    CHECK((hex[k][1] + hex[k + 3][1]).is_zero());
  }
  CHECK_FALSE(strong_general_convex_position_2d(hex));
  CHECK_FALSE(strong_general_convex_position_2d(regular_polygon(8)));
  CHECK(strong_general_convex_position_2d(regular_polygon(5)));
}

TEST_CASE("perturbed clusters") {
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t r = 2; r <= 3; ++r) {
      auto cfg = perturbed_clusters(d, r, Rational(1, 1000), 7);
      CHECK(cfg.size() == tverberg_number(d, r));
      CHECK(cfg.dim() == d);
      CHECK(in_general_position(cfg));
      const std::size_t bary = cluster_barycenter_index(d, r);
      for (std::size_t k = 0; k < d; ++k) {
        Rational delta = cfg[bary][k] - Rational(1, static_cast<unsigned long>(d + 1));
        CHECK(abs(delta) <= Rational(1, 1000));
      }
      // Cluster j sits near vertex j of the simplex 0, e_1, ..., e_d.
      for (std::size_t i = 0; i < bary; ++i) {
        const std::size_t j = i / (r - 1);
        for (std::size_t k = 0; k < d; ++k) {
          const Rational center = (j > 0 && k == j - 1) ? Rational(1) : Rational(0);
          CHECK(abs(cfg[i][k] - center) <= Rational(1, 1000));
          // Denominators are powers of two times the scale denominator.
          mpz_class den = cfg[i][k].get_den();
          while (den % 2 == 0) den /= 2;
          CHECK(1000 % den == 0);
        }
      }
      auto again = perturbed_clusters(d, r, Rational(1, 1000), 7);
      CHECK(again == cfg);
    }
  }
  CHECK_THROWS_AS(perturbed_clusters(0, 2, Rational(1, 1000), 0), TvgError);
  CHECK(perturbed_clusters(1, 3, Rational(1, 1000), 0).size() == 5);
  CHECK_THROWS_AS(perturbed_clusters(2, 1, Rational(1, 1000), 0), TvgError);
  CHECK_THROWS_AS(perturbed_clusters(2, 2, Rational(0), 0), TvgError);
}

TEST_CASE("cluster partitions isolate the barycenter and have no edges") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto cfg = perturbed_clusters(2, 3, Rational(1, 1000), seed);
    auto g = build_graph(cfg, 3);
    CHECK_FALSE(g.graph.vertices.empty());
    CHECK(g.graph.edge_count() == 0);
    const std::size_t bary = cluster_barycenter_index(2, 3);
    for (const auto& p : g.graph.vertices) {
      CHECK(p.part_sizes()[p.part_of(bary)] == 1);
      CHECK(essential_points(cfg, p).essential_points().size() == cfg.size());
      CHECK_FALSE(tolerance_check(cfg, p, 1));
    }
  }
}

TEST_CASE("random uniform") {
  auto a = random_uniform(12, 2, 5);
  auto b = random_uniform(12, 2, 5);
  CHECK(a == b);
  CHECK_FALSE(a == random_uniform(12, 2, 6));
  CHECK(in_general_position(a));
  for (const auto& p : a.points()) {
    for (const auto& x : p) {
      CHECK(abs(x) <= 1);
      CHECK(1000 % x.get_den() == 0);
    }
  }
  auto seven = random_uniform(7, 2, 11);
  bool found = false;
  for (const auto& p : enumerate_r_partitions(7, 3)) {
    if (is_tverberg(seven, p)) {
      found = true;
      break;
    }
  }
  CHECK(found);
  CHECK_THROWS_AS(random_uniform(0, 2, 1), TvgError);
  // A grid too coarse for general position.
  CHECK_THROWS_AS(random_uniform(20, 2, 1, 1), TvgError);
}

TEST_CASE("generator specs") {
  auto s = parse_generator_spec("regular-polygon:8");
  CHECK(s.kind == GeneratorSpec::Kind::RegularPolygon);
  CHECK(s.n == 8);
  auto c = parse_generator_spec("clusters:d=2,r=3,scale=1/500,seed=9");
  CHECK(c.kind == GeneratorSpec::Kind::PerturbedClusters);
  CHECK(c.scale == Rational(1, 500));
  CHECK(c.seed == 9);
  auto r = parse_generator_spec("random:n=7,d=2,seed=3");
  CHECK(r.n == 7);
  CHECK(r.bound == 1000);
  CHECK_THROWS_AS(parse_generator_spec("spiral:5"), TvgError);
  CHECK_THROWS_AS(parse_generator_spec("clusters:d=2,q=3"), TvgError);

  auto j = generator_spec_to_json(c);
  auto back = generator_spec_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.kind == c.kind);
  CHECK(back.scale == c.scale);
  CHECK(back.seed == c.seed);

  auto any = generate(s);
  CHECK(any.cyclotomic_order == 32);
  CHECK(any.size() == 8);
  auto rc = generate(r);
  CHECK(std::get<PointConfig<Rational>>(rc.config) == random_uniform(7, 2, 3));
}

TEST_CASE("save and load reproduce both scalar kinds") {
  const auto dir = std::filesystem::temp_directory_path() / "tvg_generator_test";
  std::filesystem::create_directories(dir);
  for (std::size_t n : {5u, 8u, 12u}) {
    auto poly = regular_polygon(n);
    const auto path = dir / ("poly" + std::to_string(n) + ".csv");
    {
      std::ofstream out(path);
      write_config(out, poly, polygon_field_order(n));
    }
    auto any = read_config_file(path.string());
    CHECK(std::get<PointConfig<Cyclotomic>>(any.config) == poly);
    auto spec = parse_generator_spec("file:" + path.string());
    CHECK(std::get<PointConfig<Cyclotomic>>(generate(spec).config) == poly);
  }
  auto clusters = perturbed_clusters(3, 3, Rational(1, 1000), 2);
  const auto path = dir / "clusters.csv";
  {
    std::ofstream out(path);
    write_config(out, clusters);
  }
  CHECK(std::get<PointConfig<Rational>>(read_config_file(path.string()).config) == clusters);
  CHECK_THROWS_AS(read_config_file((dir / "missing.csv").string()), TvgError);
  std::filesystem::remove_all(dir);
}
