#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hybridisc/errors.hpp"
#include "hybridisc/geometry.hpp"

using namespace hybridisc;

TEST_CASE("disc and configuration validation") {
  CHECK_THROWS_AS(Disc({0, 0}, 0.0), InvalidGeometry);
  CHECK_THROWS_AS(Disc({0, 0}, -1.0), InvalidGeometry);
  CHECK_THROWS_AS(DiscConfiguration({Disc({0, 0}, 1), Disc({1.5, 0}, 1)}, 1.0), InvalidGeometry);
  CHECK_THROWS_AS(DiscConfiguration({Disc({0, 0}, 1)}, 1.0, BoundaryKind::Flow, 1),
                  InvalidGeometry);
  CHECK(gap(Disc({0, 0}, 1), Disc({3, 0}, 1)) == doctest::Approx(1.0));
}

TEST_CASE("pair_frame on canonical, rotated and diagonal pairs") {
  const PairFrame a = pair_frame(Disc({-1, 0}, 0.99), Disc({1, 0}, 0.99));
  CHECK(std::abs(a.midpoint) < 1e-15);
  CHECK(std::abs(a.rotation - Complex{1, 0}) < 1e-15);
  CHECK(a.half_distance == doctest::Approx(1.0));
  CHECK(a.radius == 0.99);

  const PairFrame b = pair_frame(Disc({0, 0}, 0.9), Disc({0, 2}, 0.9));
  CHECK(std::abs(b.midpoint - Complex{0, 1}) < 1e-15);
  CHECK(std::abs(b.rotation - Complex{0, 1}) < 1e-15);
  CHECK(b.half_distance == doctest::Approx(1.0));

  const Disc p({1, 1}, 1.0), q({3, 3}, 1.0);
  const PairFrame c = pair_frame(p, q);
  CHECK(std::abs(c.midpoint - Complex{2, 2}) < 1e-15);
  CHECK(c.half_distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(c.rotation - std::polar(1.0, M_PI / 4)) < 1e-15);
  CHECK(std::abs(c.to_frame(p.center) + c.half_distance) < 1e-14);
  CHECK(std::abs(c.to_frame(q.center) - c.half_distance) < 1e-14);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const Complex z{u(rng), u(rng)};
    CHECK(std::abs(c.from_frame(c.to_frame(z)) - z) < 1e-13);
  }
}

TEST_CASE("pair_frame rejects unequal radii and overlap") {
  CHECK_THROWS_AS(pair_frame(Disc({-1, 0}, 0.5), Disc({1, 0}, 0.6)), UnsupportedGeometry);
  CHECK_THROWS_AS(pair_frame(Disc({-1, 0}, 1.0), Disc({0.5, 0}, 1.0)), InvalidGeometry);
}

TEST_CASE("close_pairs") {
  const auto two = two_disc_configuration(1.0, 0.99, 1.0);  // gap 0.02
  CHECK(close_pairs(two, 0.01).empty());
  CHECK(close_pairs(two, 0.05).size() == 1);

  // Three collinear discs, gaps 0.005, 0.005 and 2.21 between the ends.
  const DiscConfiguration line({Disc({0, 0}, 1), Disc({2.005, 0}, 1), Disc({4.01, 0}, 1)}, 1.0);
  const auto pairs = close_pairs(line, 0.01);
  REQUIRE(pairs.size() == 2);
  int brute = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) brute += gap(line.disc(i), line.disc(j)) < 0.01;
  }
  CHECK(brute == 2);
  CHECK(pairs[0].first == 0);
  CHECK(pairs[0].second == 1);
  CHECK(pairs[1].first == 1);
  CHECK(pairs[1].second == 2);
}

TEST_CASE("nine-disc array has twelve neighbour pairs") {
  for (double eps : {1e-2, 1e-4, 1e-7}) {
    const auto config = nine_disc_array(0.4, eps, 1.0);
    CHECK(config.size() == 9);
    CHECK(config.disc(0).radius == doctest::Approx(0.2 - eps / 2));
    const auto pairs = close_pairs(config, 0.1);
    CHECK(pairs.size() == 12);
    for (const auto& p : pairs) {
      CHECK(gap(config.disc(p.first), config.disc(p.second)) == doctest::Approx(eps).epsilon(1e-6));
    }
    // Threshold above the diagonal gap adds the eight diagonal pairs.
    CHECK(close_pairs(config, 0.2).size() == 20);
  }
}

TEST_CASE("close_pairs is invariant under relabelling") {
  const auto config = nine_disc_array(0.4, 1e-3, 1.0);
  std::vector<Disc> reversed(config.discs().rbegin(), config.discs().rend());
  const DiscConfiguration other(reversed, 1.0);
  const auto a = close_pairs(config, 0.1);
  const auto b = close_pairs(other, 0.1);
  REQUIRE(a.size() == b.size());
  std::vector<std::pair<std::size_t, std::size_t>> mapped, direct;
  for (const auto& p : b) {
    const std::size_t i = 8 - p.first, j = 8 - p.second;
    mapped.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (const auto& p : a) direct.emplace_back(p.first, p.second);
  std::sort(mapped.begin(), mapped.end());
  CHECK(mapped == direct);
}
