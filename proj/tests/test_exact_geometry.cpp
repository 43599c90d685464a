#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tvg/config_io.hpp"
#include "tvg/generators.hpp"
#include "tvg/lp.hpp"
#include "tvg/predicates.hpp"
#include "tvg/tverberg.hpp"

using namespace tvg;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  Rational q(uniform_int(rng, -50, 50), uniform_int(rng, 1, 12));
  q.canonicalize();
  return q;
}

const std::vector<unsigned> kOrders = {5, 7, 8, 9, 12, 16, 20, 24, 28, 32};

Cyclotomic random_cyclotomic(const CyclotomicField& f, std::mt19937_64& rng) {
  Cyclotomic x = Cyclotomic::cos_2pi(f, uniform_int(rng, 0, f.order() - 1));
  if (uniform_int(rng, 0, 1)) x = x * Cyclotomic(random_rational(rng));
  if (uniform_int(rng, 0, 1)) x = x + Cyclotomic::cos_2pi(f, uniform_int(rng, 0, f.order() - 1));
  return x;
}

Cyclotomic random_expression(const CyclotomicField& f, std::mt19937_64& rng, int depth) {
  if (depth == 0) return random_cyclotomic(f, rng);
  Cyclotomic a = random_expression(f, rng, depth - 1);
  Cyclotomic b = random_expression(f, rng, depth - 1);
  switch (uniform_int(rng, 0, 4)) {
    case 0:
      return a + b;
    case 1:
      return a - b;
    case 2:
      return a * b;
    case 3:
      return b.is_zero() ? a : a / b;
    default: {
      // Exactly zero, built along two different routes.
      Cyclotomic c = random_cyclotomic(f, rng);
      return a * (b + c) - a * b - a * c;
    }
  }
}

}  // namespace

TEST_CASE("orientation examples") {
  auto tri = th::rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
  const std::vector<std::size_t> idx{0, 1, 2};
  CHECK(orientation(tri, idx) == 1);
  auto line = th::rational_config(2, {{0, 0}, {1, 1}, {2, 2}});
  CHECK(orientation(line, idx) == 0);

  auto oct = regular_polygon(8);
  for (std::size_t k = 0; k < 8; ++k) {
    const std::vector<std::size_t> three{k, (k + 1) % 8, (k + 2) % 8};
    CHECK(orientation(oct, three) == 1);
    double det = 0;
    const double pi = std::acos(-1.0);
    auto x = [&](std::size_t i) { return std::cos(2 * pi * static_cast<double>(i) / 8); };
    auto y = [&](std::size_t i) { return std::sin(2 * pi * static_cast<double>(i) / 8); };
    det = (x(three[1]) - x(three[0])) * (y(three[2]) - y(three[0])) -
          (y(three[1]) - y(three[0])) * (x(three[2]) - x(three[0]));
    CHECK(det > 0);
  }
}

TEST_CASE("orientation errors and antisymmetry") {
  auto tri = th::rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
  const std::vector<std::size_t> two{0, 1};
  CHECK_THROWS_AS(orientation(tri, two), TvgError);
  const std::vector<std::size_t> bad{0, 1, 7};
  CHECK_THROWS_AS(orientation(tri, bad), TvgError);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t d = static_cast<std::size_t>(uniform_int(rng, 1, 3));
    auto cfg = th::small_grid_config(d + 1, d, 4, rng);
    std::vector<std::size_t> idx(d + 1);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const int s = orientation(cfg, idx);
    std::swap(idx[0], idx[d]);
    CHECK(orientation(cfg, idx) == -s);
  }
}

TEST_CASE("affine dependence kernel examples") {
  auto line = th::rational_config(1, {{0}, {1}, {2}});
  auto k = affine_dependence_kernel(line);
  REQUIRE(k.size() == 1);
  // Proportional to (1, -2, 1).
  CHECK(k[0][1] == Rational(-2) * k[0][0]);
  CHECK(k[0][2] == k[0][0]);

  auto tri = th::rational_config(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(affine_dependence_kernel(tri).empty());

  auto four = th::rational_config(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}});
  auto k4 = affine_dependence_kernel(four);
  REQUIRE(k4.size() == 1);
  // (1,1) is the midpoint of (2,0) and (0,2): the dependence is (0, -1/2, -1/2, 1).
  const int s = sgn(k4[0][3]);
  CHECK(s != 0);
  CHECK(sgn(k4[0][0]) == 0);
  CHECK(sgn(k4[0][1]) == -s);
  CHECK(sgn(k4[0][2]) == -s);
  CHECK(k4[0][1] * 2 == -k4[0][3]);

  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    auto cfg = th::small_grid_config(static_cast<std::size_t>(uniform_int(rng, 1, 7)), 2, 3, rng);
    auto basis = affine_dependence_kernel(cfg);
    for (const auto& v : basis) {
      Rational s0 = 0, sx = 0, sy = 0;
      for (std::size_t i = 0; i < cfg.size(); ++i) {
        s0 += v[i];
        sx += v[i] * cfg[i][0];
        sy += v[i] * cfg[i][1];
      }
      CHECK(s0 == 0);
      CHECK(sx == 0);
      CHECK(sy == 0);
    }
    // Dimension n - rank of the lifted 3 x n matrix.
    std::size_t rank = 0;
    {
      std::vector<std::vector<Rational>> m(3, std::vector<Rational>(cfg.size()));
      for (std::size_t i = 0; i < cfg.size(); ++i) {
        m[0][i] = cfg[i][0];
        m[1][i] = cfg[i][1];
        m[2][i] = 1;
      }
      for (std::size_t c = 0; c < cfg.size() && rank < 3; ++c) {
        std::size_t p = rank;
        while (p < 3 && m[p][c] == 0) ++p;
        if (p == 3) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < 3; ++r) {
          if (r == rank || m[r][c] == 0) continue;
          const Rational f = m[r][c] / m[rank][c];
          for (std::size_t j = 0; j < cfg.size(); ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
      }
    }
    CHECK(basis.size() == cfg.size() - rank);
  }
}

TEST_CASE("lp_feasible examples") {
  Matrix<Rational> a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  auto res = lp_feasible(a, std::vector<Rational>{Rational(1)});
  CHECK(res.feasible());
  CHECK(res.support_size == 1);
  Rational total = 0;
  for (const auto& [i, v] : res.basic_solution) total += v;
  CHECK(total == 1);

  CHECK_FALSE(lp_feasible(a, std::vector<Rational>{Rational(-1)}).feasible());

  auto four = th::rational_config(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}});
  auto cert = common_point(four, {{0, 3}, {1, 2}});
  REQUIRE(cert.has_value());
  CHECK(cert->witness == std::vector<Rational>{1, 1});
}

TEST_CASE("lp_feasible solutions are exact basic solutions") {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int it = 0; it < 400; ++it) {
    const std::size_t rows = static_cast<std::size_t>(uniform_int(rng, 1, 4));
    const std::size_t cols = static_cast<std::size_t>(uniform_int(rng, 1, 7));
    Matrix<Rational> a(rows, cols);
    std::vector<Rational> b(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = uniform_int(rng, -3, 3);
      b[r] = uniform_int(rng, -4, 4);
    }
    // Sometimes duplicate a row to force rank deficiency.
    if (rows >= 2 && uniform_int(rng, 0, 2) == 0) {
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c) * 2;
      b[rows - 1] = b[0] * 2;
    }
    auto res = lp_feasible(a, b);
    if (!res.feasible()) continue;
    ++feasible;
    CHECK(res.support_size == res.basic_solution.size());
    CHECK(res.support_size <= res.row_rank);
    CHECK(res.row_rank <= rows);
    for (std::size_t r = 0; r < rows; ++r) {
      Rational lhs = 0;
      for (const auto& [i, v] : res.basic_solution) {
        CHECK(sgn(v) > 0);
        lhs += a(r, i) * v;
      }
      CHECK(lhs == b[r]);
    }
  }
  CHECK(feasible > 50);
}

TEST_CASE("lp_feasible agrees with polygon clipping on 500 two-part instances") {
  std::mt19937_64 rng(99);
  int meets = 0;
  for (int it = 0; it < 500; ++it) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 8));
    auto cfg = th::small_grid_config(n, 2, it % 2 ? 3 : 20, rng);
    auto p = th::random_partition(n, 2, rng);
    const bool lp = common_point(cfg, p.blocks()).has_value();
    const bool clip = oracle::radon_by_clipping(cfg, p);
    CHECK(lp == clip);
    meets += lp;
  }
  CHECK(meets > 50);
  CHECK(meets < 450);
}

TEST_CASE("general position examples") {
  auto four = th::rational_config(2, {{0, 0}, {5, 1}, {2, 7}, {-3, 4}});
  CHECK(in_general_position(four));
  auto col = th::rational_config(2, {{0, 0}, {1, 1}, {2, 2}, {5, 0}});
  CHECK_FALSE(in_general_position(col));
  CHECK(in_general_position(regular_polygon(6)));
  auto two = th::rational_config(2, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(in_general_position(two), TvgError);
}

TEST_CASE("strong general convex position examples") {
  CHECK_FALSE(strong_general_convex_position_2d(regular_polygon(6)));
  CHECK(strong_general_convex_position_2d(regular_polygon(7)));
  CHECK_FALSE(strong_general_convex_position_2d(regular_polygon(8)));
  auto quad = th::rational_config(2, {{0, 0}, {7, 1}, {6, 5}, {1, 4}});
  CHECK(strong_general_convex_position_2d(quad));

  auto inner = th::rational_config(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK_THROWS_AS(strong_general_convex_position_2d(inner), TvgError);
  auto line = th::rational_config(1, {{0}, {1}});
  CHECK_THROWS_AS(strong_general_convex_position_2d(line), TvgError);
}

TEST_CASE("rational field laws") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 500; ++it) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (b != 0) CHECK((a / b) * b == a);
  }
}

TEST_CASE("cyclotomic field laws") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 300; ++it) {
    const auto& f = CyclotomicField::get(kOrders[static_cast<std::size_t>(uniform_int(rng, 0, 9))]);
    const Cyclotomic a = random_cyclotomic(f, rng), b = random_cyclotomic(f, rng), c = random_cyclotomic(f, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a - a == Cyclotomic(0));
  }
}

TEST_CASE("cyclotomic identities") {
  for (unsigned m : {8u, 12u, 20u, 28u, 40u}) {
    const auto& f = CyclotomicField::get(m);
    for (long k = 0; k < static_cast<long>(m); ++k) {
      const Cyclotomic c = Cyclotomic::cos_2pi(f, k);
      const Cyclotomic s = Cyclotomic::cos_2pi(f, k - static_cast<long>(m) / 4);
      CHECK(c * c + s * s == Cyclotomic(1));
      const double expect = std::cos(2 * std::acos(-1.0) * static_cast<double>(k) / m);
      if (std::abs(expect) > 1e-9) CHECK(c.sign() == (expect > 0 ? 1 : -1));
      else CHECK(c.is_zero());
    }
  }
}

TEST_CASE("cyclotomic sign agrees with 256-bit evaluation on 1000 expressions") {
  std::mt19937_64 rng(314);
  int decided = 0, zeros = 0;
  for (int it = 0; it < 1000; ++it) {
    const auto& f = CyclotomicField::get(kOrders[static_cast<std::size_t>(uniform_int(rng, 0, 9))]);
    const Cyclotomic x = random_expression(f, rng, static_cast<int>(uniform_int(rng, 0, 3)));
    const auto ev = oracle::mpfr_sign(x, 256);
    if (x.is_zero()) {
      ++zeros;
      CHECK(x.sign() == 0);
      CHECK(ev.sign == 0);
    } else if (ev.decided) {
      ++decided;
      CHECK(x.sign() == ev.sign);
    }
  }
  CHECK(decided > 500);
  CHECK(zeros > 20);
}

TEST_CASE("config file round trip") {
  std::mt19937_64 rng(8);
  auto cfg = random_uniform(9, 3, 17);
  std::stringstream ss;
  write_config(ss, cfg);
  auto back = read_config(ss);
  CHECK(std::get<PointConfig<Rational>>(back.config) == cfg);

  auto poly = regular_polygon(7);
  std::stringstream sp;
  write_config(sp, poly, polygon_field_order(7));
  const std::string text = sp.str();
  auto pback = read_config(sp);
  CHECK(pback.cyclotomic_order == 28);
  CHECK(std::get<PointConfig<Cyclotomic>>(pback.config) == poly);
  std::stringstream again;
  write_config(again, pback);
  CHECK(again.str() == text);

  std::istringstream bad("# dim=2 scalar=rational\n1,2\n3\n");
  CHECK_THROWS_AS(read_config(bad), TvgError);
  std::istringstream empty("# dim=2 scalar=rational\n");
  CHECK_THROWS_AS(read_config(empty), TvgError);
}
