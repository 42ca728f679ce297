#include <doctest.h>

#include "flood/error.hpp"
#include "flood/flood_state.hpp"
#include "flood/oracle.hpp"
#include "flood/poly_solvers.hpp"
#include "flood/random.hpp"
#include "../support/reference.hpp"

using namespace flood;

namespace {

std::vector<ColourId> ids(const std::vector<int>& xs) {
  std::vector<ColourId> out;
  for (int x : xs) out.push_back(ColourId{x});
  return out;
}

std::vector<int> random_path(random::Rng& rng, int max_len, int colours) {
  std::vector<int> p(1 + random::below(rng, static_cast<std::uint64_t>(max_len)));
  for (int& x : p) x = static_cast<int>(random::below(rng, static_cast<std::uint64_t>(colours)));
  return p;
}

}  // namespace

TEST_CASE("two colours") {
  SUBCASE("star") {
    const auto g = ref::graph(2, {0, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
    const auto r = solve_two_colour(g);
    CHECK(r.optimum == 1);
    CHECK(r.centre == 0);
    CHECK(r.witness == std::vector<Move>{Move::at(0, ColourId{1})});
  }
  SUBCASE("alternating path of five") {
    const auto g = ref::path({0, 1, 0, 1, 0}, 2);
    CHECK(solve_two_colour(g).optimum == ref::flood_free(g));
    CHECK(solve_two_colour(g).optimum == 2);
    CHECK(solve_two_colour(g).centre == 2);
  }
  SUBCASE("single vertex") {
    const auto r = solve_two_colour(ref::graph(2, {1}, {}));
    CHECK(r.optimum == 0);
    CHECK(r.witness.empty());
  }
  SUBCASE("three colours are rejected") {
    CHECK_THROWS_AS(solve_two_colour(ref::path({0, 1, 2}, 3)), InvalidArgument);
  }
}

TEST_CASE("two colours equals radius and the oracle") {
  random::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(random::below(rng, 10));
    const auto g = random::random_two_coloured_graph(rng, n, 15);
    const auto r = solve_two_colour(g);
    CHECK(r.optimum == ref::radius(g));
    CHECK(r.optimum == oracle::solve_free_exact(g).optimum);
    CHECK(apply_sequence(FloodState::from_graph(g), r.witness).is_flooded());
    CHECK(static_cast<int>(r.witness.size()) == r.optimum);
  }
}

TEST_CASE("paths") {
  CHECK(solve_path(ids({0})) == 0);
  CHECK(solve_path(ids({0, 1, 0})) == 1);
  CHECK(solve_path(ids({0, 1, 2})) == 2);
  CHECK(solve_path(ids({0, 1, 2})) == ref::flood_free(ref::path({0, 1, 2}, 3)));
  CHECK(solve_path(ids({0, 0, 1, 1, 0})) == 1);
  CHECK(solve_path(ids({0, 1, 0}), ColourId{1}) == 2);
  CHECK(solve_path(ids({0}), ColourId{3}) == 1);
  CHECK_THROWS_AS(solve_path(std::vector<ColourId>{}), InvalidArgument);
}

TEST_CASE("paths agree with reference search") {
  random::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_path(rng, 8, 3);
    const auto g = ref::path(p, 3);
    CHECK(solve_path(ids(p), std::nullopt, 3) == ref::flood_free(g));
    for (int d = 0; d < 3; ++d) CHECK(solve_path(ids(p), ColourId{d}, 3) == ref::flood_free(g, d));
  }
}

TEST_CASE("deleting a path vertex never costs more") {
  random::Rng rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_path(rng, 10, 3);
    if (p.size() < 2) continue;
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto q = p;
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
      for (int d = 0; d < 3; ++d) CHECK(solve_path(ids(q), ColourId{d}, 3) <= solve_path(ids(p), ColourId{d}, 3));
    }
  }
}

TEST_CASE("concatenated paths cost at most the sum") {
  random::Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_path(rng, 10, 3);
    for (std::size_t cut = 1; cut < p.size(); ++cut) {
      const std::vector<int> a(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(cut));
      const std::vector<int> b(p.begin() + static_cast<std::ptrdiff_t>(cut), p.end());
      for (int d = 0; d < 3; ++d) {
        const ColourId col{d};
        CHECK(solve_path(ids(p), col, 3) <= solve_path(ids(a), col, 3) + solve_path(ids(b), col, 3));
      }
    }
  }
}

TEST_CASE("approximation examples") {
  SUBCASE("single row is tight") {
    const auto r = approx_board(ref::board(1, 3, 2, {0, 1, 0}));
    CHECK(r.lower == 1);
    CHECK(r.upper == 1);
    CHECK(r.witness.size() == 1);
  }
  SUBCASE("2x2 checkerboard") {
    const Board b = ref::board(2, 2, 2, {0, 1, 1, 0});
    const auto r = approx_board(b);
    CHECK(r.lower == 1);
    CHECK(r.upper == 3);
    const int exact = ref::flood_free(b.cell_graph());
    CHECK(exact == 2);
    CHECK(r.lower <= exact);
    CHECK(exact <= r.upper);
  }
  SUBCASE("monochromatic") {
    const auto r = approx_board(ref::board(3, 4, 3, std::vector<int>(12, 2)));
    CHECK(r.lower == 0);
    CHECK(r.upper == 6);
    CHECK(r.witness.empty());
  }
}

TEST_CASE("approximation brackets the optimum") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    random::Rng rng(seed);
    const int k = 1 + static_cast<int>(random::below(rng, 3));
    const int n = 1 + static_cast<int>(random::below(rng, 4));
    const int c = 2 + static_cast<int>(random::below(rng, 2));
    const Board b = random::random_board(k, n, c, seed);
    const auto r = approx_board(b);
    const int exact = oracle::solve_free_exact(b.cell_graph()).optimum;
    CHECK(r.lower <= exact);
    CHECK(exact <= r.upper);
    CHECK(r.upper == r.lower + c * (k - 1));
    CHECK(static_cast<int>(r.witness.size()) <= r.upper);
    CHECK(apply_sequence(FloodState::from_board(b), r.witness).is_flooded());
  }
}
