#include <doctest.h>

#include "flood/error.hpp"
#include "flood/flood_state.hpp"
#include "flood/json_io.hpp"
#include "flood/random.hpp"
#include "../support/reference.hpp"

using namespace flood;

namespace {

const ColourId c1{0};
const ColourId c2{1};
const ColourId c3{2};

std::vector<Move> seq(std::initializer_list<Move> moves) { return moves; }

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
  CHECK_THROWS_AS(ref::graph(2, {0, 1}, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ref::graph(2, {0, 1}, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ref::graph(2, {0, 1}, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(ref::graph(2, {0, 2}, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(ref::board(2, 2, 2, {0, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(ref::board(0, 2, 2, {}), InvalidArgument);
}

TEST_CASE("contraction of monochromatic components") {
  SUBCASE("two equal vertices collapse") {
    auto [g, part] = contract_monochromatic(ref::graph(1, {0, 0}, {{0, 1}}));
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(part.regions[0].members == std::vector<VertexId>{0, 1});
  }
  SUBCASE("proper path is a fixed point") {
    const auto p = ref::path({0, 1, 0}, 2);
    auto [g, part] = contract_monochromatic(p);
    CHECK(g == p);
    CHECK(part.size() == 3);
  }
  SUBCASE("2x2 board with three equal cells") {
    auto [g, part] = board_to_graph(ref::board(2, 2, 2, {0, 0, 0, 1}));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.colour(0) == c1);
    CHECK(g.colour(1) == c2);
    CHECK(part.owner == std::vector<VertexId>{0, 0, 0, 1});
  }
}

TEST_CASE("board to graph") {
  SUBCASE("1x3 is a path") {
    auto [g, part] = board_to_graph(ref::board(1, 3, 2, {0, 1, 0}));
    CHECK(g == ref::path({0, 1, 0}, 2));
  }
  SUBCASE("1x1 is one vertex") {
    CHECK(board_to_graph(ref::board(1, 1, 1, {0})).first.vertex_count() == 1);
  }
  SUBCASE("diagonals are not adjacent") {
    auto [g, part] = board_to_graph(ref::board(2, 2, 2, {0, 1, 1, 0}));
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    for (VertexId v = 0; v < 4; ++v) CHECK(g.neighbours(v).size() == 2);
    CHECK(g.is_proper());
  }
}

TEST_CASE("free moves") {
  const auto s = FloodState::from_graph(ref::path({0, 1, 0}, 2));
  SUBCASE("centre move floods") {
    const auto t = apply_free_move(s, Move::at(1, c1));
    CHECK(t.region_count() == 1);
    CHECK(t.is_flooded());
    CHECK(t.graph().colour(0) == c1);
    CHECK(t.moves_played() == 1);
  }
  SUBCASE("isolated vertex") {
    const auto t = apply_free_move(FloodState::from_graph(ref::graph(2, {0}, {})), Move::at(0, c2));
    CHECK(t.region_count() == 1);
    CHECK(t.graph().colour(0) == c2);
  }
  SUBCASE("merge with one neighbour") {
    const auto t = apply_free_move(FloodState::from_graph(ref::path({0, 1, 2}, 3)), Move::at(0, c2));
    CHECK(t.region_count() == 2);
    CHECK(t.graph().colour(0) == c2);
    CHECK(t.graph().colour(1) == c3);
  }
  SUBCASE("bad vertex, colour or missing vertex") {
    CHECK_THROWS_AS(apply_free_move(s, Move::at(3, c1)), InvalidArgument);
    CHECK_THROWS_AS(apply_free_move(s, Move::at(0, c3)), InvalidArgument);
    CHECK_THROWS_AS(apply_free_move(s, Move::pivot(c1)), InvalidArgument);
  }
  SUBCASE("moves name original vertices") {
    const auto t = apply_free_move(s, Move::at(2, c2));
    CHECK(t.region_count() == 2);
    CHECK(t.region_of(2) == 1);
    CHECK(t.representative(1) == 1);
  }
}

TEST_CASE("fixed moves") {
  SUBCASE("1x2") {
    const auto s = FloodState::from_board(ref::board(1, 2, 2, {0, 1}));
    CHECK(apply_fixed_move(s, 0, c2).is_flooded());
  }
  SUBCASE("1x3 from the left takes two moves") {
    const auto s = FloodState::from_board(ref::board(1, 3, 2, {0, 1, 0}));
    const auto a = apply_fixed_move(s, 0, c2);
    CHECK_FALSE(a.is_flooded());
    CHECK(apply_fixed_move(a, 0, c1).is_flooded());
  }
  SUBCASE("pivot out of range") {
    const auto s = FloodState::from_board(ref::board(1, 2, 2, {0, 1}));
    CHECK_THROWS_AS(apply_fixed_move(s, 2, c2), InvalidArgument);
    CHECK_THROWS_AS(apply_fixed_move(s, -1, c2), InvalidArgument);
  }
}

TEST_CASE("move sequences") {
  const auto s = FloodState::from_graph(ref::path({0, 1, 0}, 2));
  CHECK(apply_sequence(s, {}) == s);
  CHECK(apply_sequence(s, seq({Move::at(1, c1)})).is_flooded());
  SUBCASE("first bad move reports its index") {
    const auto moves = seq({Move::at(0, c2), Move::at(9, c1)});
    try {
      apply_sequence(s, moves);
      FAIL("expected InvalidMove");
    } catch (const InvalidMove& e) {
      CHECK(e.index() == 1);
    }
  }
  SUBCASE("vertexless moves use the pivot") {
    CHECK(apply_sequence(s, seq({Move::pivot(c1)}), VertexId{1}).is_flooded());
    CHECK_THROWS_AS(apply_sequence(s, seq({Move::pivot(c1)})), InvalidMove);
  }
}

TEST_CASE("linked sets") {
  const auto s = FloodState::from_graph(ref::path({0, 1, 0}, 2));
  const std::vector<VertexId> ends{0, 2};
  CHECK_FALSE(is_linked(s, ends));
  CHECK(is_linked(apply_free_move(s, Move::at(1, c1)), ends));
  CHECK(is_linked(FloodState::from_graph(ref::graph(1, {0, 0, 0}, {{0, 1}, {1, 2}})), ends));
  const std::vector<VertexId> bad{0, 5};
  CHECK_THROWS_AS(is_linked(s, bad), InvalidArgument);
}

TEST_CASE("json round trips with 1-based labels") {
  const Board b = ref::board(2, 2, 3, {0, 1, 2, 0});
  const auto j = io::board_to_json(b);
  CHECK(j["cells"] == io::Json::array({1, 2, 3, 1}));
  CHECK(io::board_from_json(j) == b);
  const auto g = ref::path({0, 2, 1}, 3);
  CHECK(io::graph_from_json(io::graph_to_json(g)) == g);
  CHECK_THROWS_AS(io::board_from_json(io::Json::parse(R"({"height":1,"width":1,"colours":2,"cells":[3]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::board_from_json(io::Json::parse(R"({"height":1,"width":2,"colours":2,"cells":[0,1]})")),
                  InvalidArgument);
  const Move m = io::move_from_json(io::Json::parse(R"({"vertex":4,"colour":2})"));
  CHECK(m == Move::at(4, c2));
  CHECK(io::move_to_json(Move::pivot(c3)) == io::Json::parse(R"({"colour":3})"));
}

TEST_CASE("properties under random play") {
  random::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(random::below(rng, 9));
    const int c = 2 + static_cast<int>(random::below(rng, 3));
    const auto g = random::random_connected_graph(rng, n, c, 25);
    FloodState s = FloodState::from_graph(g);
    std::vector<Move> played;
    std::vector<std::vector<VertexId>> linked;
    while (!s.is_flooded()) {
      REQUIRE(s.graph().is_proper());
      // Region map is total and onto the current vertices.
      std::vector<bool> hit(static_cast<std::size_t>(s.region_count()), false);
      for (VertexId r : s.region_map()) hit[static_cast<std::size_t>(r)] = true;
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
      for (const auto& set : linked) CHECK(is_linked(s, set));

      const VertexId at = static_cast<VertexId>(random::below(rng, static_cast<std::uint64_t>(n)));
      const ColourId colour{static_cast<int>(random::below(rng, static_cast<std::uint64_t>(c)))};
      const Move move = Move::at(at, colour);
      const FloodState t = apply_free_move(s, move);
      CHECK(t.region_count() <= s.region_count());
      played.push_back(move);
      s = t;
      std::vector<VertexId> set;
      for (VertexId x = 0; x < n; ++x)
        if (s.region_of(x) == s.region_of(at)) set.push_back(x);
      linked.push_back(set);
    }
    CHECK(apply_sequence(FloodState::from_graph(g), played) == s);
    CHECK(s.moves_played() == static_cast<int>(played.size()));
  }
}

TEST_CASE("board partition tiles the board with maximal connected regions") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Board b = random::random_board(3, 5, 3, seed);
    const auto [g, part] = board_to_graph(b);
    const auto cells = b.cell_graph();
    std::vector<int> seen(static_cast<std::size_t>(b.cell_count()), 0);
    for (std::size_t r = 0; r < part.size(); ++r) {
      const auto& members = part.regions[r].members;
      for (VertexId x : members) {
        ++seen[static_cast<std::size_t>(x)];
        CHECK(b.cells()[static_cast<std::size_t>(x)] == part.regions[r].colour);
      }
      // Connected and maximal: the reference component from the first
      // member is exactly this region.
      auto comp = ref::component(cells, ref::colouring_of(cells), members.front());
      std::sort(comp.begin(), comp.end());
      CHECK(comp == members);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int k) { return k == 1; }));
  }
}
