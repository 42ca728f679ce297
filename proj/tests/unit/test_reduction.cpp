#include <doctest.h>

#include <deque>

#include "flood/board_paths.hpp"
#include "flood/error.hpp"
#include "flood/flood_state.hpp"
#include "flood/oracle.hpp"
#include "flood/reduction.hpp"
#include "../support/reference.hpp"

using namespace flood;
using namespace flood::reduction;

namespace {

bool is_subsequence(const std::string& s, const std::string& t) {
  std::size_t i = 0;
  for (char c : t)
    if (i < s.size() && s[i] == c) ++i;
  return i == s.size();
}

// Shortest common supersequence by trying every binary string in order of length.
int brute_scs(const std::vector<std::string>& strings) {
  for (int len = 0;; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string t;
      for (int i = 0; i < len; ++i) t.push_back((bits >> i) & 1u ? '2' : '1');
      if (std::all_of(strings.begin(), strings.end(), [&](const std::string& s) { return is_subsequence(s, t); }))
        return len;
    }
  }
}

// Fewest regions on a left-to-right cell path: 0-1 search on cells, paying
// one whenever a step leaves the current region.
int brute_crossing(const Board& b) {
  const auto g = b.cell_graph();
  const auto owner = board_to_graph(b).second.owner;
  std::vector<int> dist(static_cast<std::size_t>(b.cell_count()), 1 << 20);
  std::deque<VertexId> queue;
  for (int r = 0; r < b.height(); ++r) {
    dist[static_cast<std::size_t>(b.cell_id(r, 0))] = 1;
    queue.push_back(b.cell_id(r, 0));
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbours(x)) {
      const int step = owner[static_cast<std::size_t>(x)] == owner[static_cast<std::size_t>(y)] ? 0 : 1;
      const int nd = dist[static_cast<std::size_t>(x)] + step;
      if (nd < dist[static_cast<std::size_t>(y)]) {
        dist[static_cast<std::size_t>(y)] = nd;
        step == 0 ? queue.push_front(y) : queue.push_back(y);
      }
    }
  }
  int best = 1 << 20;
  for (int r = 0; r < b.height(); ++r) best = std::min(best, dist[static_cast<std::size_t>(b.cell_id(r, b.width() - 1))]);
  return best;
}

ScsInstance instance(std::vector<std::string> strings, int l) {
  ScsInstance i;
  i.strings = std::move(strings);
  i.l = l;
  return i;
}

const Claim* find_claim(const ReductionReport& r, const std::string& name) {
  for (const auto& c : r.claims)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("scs examples") {
  CHECK(scs_exact({"1", "2"}).length == 2);
  CHECK(scs_exact({"12", "21"}).length == brute_scs({"12", "21"}));
  CHECK(scs_exact({"12", "21"}).length == 3);
  CHECK(scs_exact({"", "1"}).length == 1);
  CHECK(scs_exact({""}).length == 0);
  CHECK_THROWS_AS(scs_exact({"13"}), InvalidArgument);
  CHECK_THROWS_AS(scs_exact({"1212", "2121"}, 4), BudgetExceeded);
}

TEST_CASE("scs agrees with brute force and its witness embeds every string") {
  const std::vector<std::string> words{"", "1", "2", "11", "12", "21", "22", "121", "212", "112", "221"};
  for (const auto& a : words) {
    for (const auto& b : words) {
      for (const auto& c : {std::string(""), std::string("21"), std::string("122")}) {
        const std::vector<std::string> strings{a, b, c};
        const auto r = scs_exact(strings);
        CHECK(r.length == brute_scs(strings));
        CHECK(static_cast<int>(r.witness.size()) == r.length);
        for (const auto& s : strings) CHECK(is_subsequence(s, r.witness));
      }
    }
  }
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(instance({}, 1).validate(), InvalidArgument);
  CHECK_THROWS_AS(instance({"3"}, 1).validate(), InvalidArgument);
  CHECK_THROWS_AS(instance({"1"}, -1).validate(), InvalidArgument);
  CHECK_NOTHROW(instance({"", "12"}, 0).validate());
  CHECK(instance({"1", "212"}, 0).max_length() == 3);
}

TEST_CASE("fixed board shape") {
  const auto rb = build_fixed_board(instance({"1"}, 1));
  CHECK(rb.board.height() == 3);
  CHECK(rb.board.width() <= 1 * 4 + 2 + 3);
  CHECK(rb.board.colour_count() == 4);
  CHECK(rb.claimed_threshold == 5);
  CHECK(rb.external_cell == 0);
  REQUIRE(rb.gadget_spans.size() == 2);
  for (int c = 0; c < rb.gadget_spans[1].first_col; ++c) CHECK(rb.board.at(0, c) == ColourId{2});
  CHECK(rb.gadget_spans[0].last_col - rb.gadget_spans[0].first_col + 1 == 3);
  CHECK(rb.gadget_spans[1].name == "R");
  CHECK(rb.gadget_spans[1].last_col == rb.board.width() - 1);
}

TEST_CASE("fixed board examples") {
  SUBCASE("yes instance") {
    const auto rb = build_fixed_board(instance({"1", "2"}, 2));
    const int m = oracle::solve_fixed_exact(rb.board.cell_graph(), 0, 9).optimum;
    CHECK(m <= 7);
    CHECK(scs_exact({"1", "2"}).length <= 2);
  }
  SUBCASE("no instance") {
    const auto rb = build_fixed_board(instance({"12", "21"}, 2));
    const int m = oracle::solve_fixed_exact(rb.board.cell_graph(), 0, 9).optimum;
    CHECK(m > 7);
    CHECK(scs_exact({"12", "21"}).length > 2);
  }
}

TEST_CASE("terminal section alone needs 2l+3 moves") {
  for (int l = 0; l <= 3; ++l) {
    CAPTURE(l);
    const Board b = terminal_section_board(l);
    CHECK(b.width() == 2 * l + 4);
    CHECK(oracle::solve_fixed_exact(b.cell_graph(), 0).optimum == 2 * l + 3);
  }
}

TEST_CASE("free board structure") {
  const auto rb = build_free_board(instance({"1"}, 1));
  CHECK(rb.board.width() <= 4 + 4 + 7);
  CHECK(min_crossing_regions(rb.board) == 11);
  CHECK(brute_crossing(rb.board) == 11);

  const auto fixed = build_fixed_board(instance({"1"}, 1));
  const int offset = rb.board.width() - fixed.board.width();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < fixed.board.width(); ++c) CHECK(rb.board.at(r, offset + c) == fixed.board.at(r, c));

  const auto seq = flooding_sequence("1", 1);
  CHECK(seq == std::vector<ColourId>{ColourId{0}, ColourId{2}, ColourId{3}, ColourId{1}, ColourId{0}});
  std::vector<Move> moves;
  for (ColourId c : seq) moves.push_back(Move::at(rb.external_cell, c));
  CHECK(apply_sequence(FloodState::from_board(rb.board), moves).is_flooded());
}

TEST_CASE("crossing count matches brute force on the small suite") {
  for (const auto& strings : std::vector<std::vector<std::string>>{{"1"}, {"12", "21"}, {"", "2"}, {"22", "1"}}) {
    for (int l = 0; l <= 3; ++l) {
      const auto rb = build_free_board(instance(strings, l));
      CHECK(min_crossing_regions(rb.board) == brute_crossing(rb.board));
      CHECK(min_crossing_regions(rb.board) == 4 * l + 7);
    }
  }
}

TEST_CASE("flooding sequence") {
  CHECK(flooding_sequence("", 0) == std::vector<ColourId>{ColourId{3}, ColourId{1}, ColourId{0}});
  CHECK(flooding_sequence("2", 2).size() == 7);
  CHECK(flooding_sequence("2", 2)[2] == ColourId{0});
  CHECK_THROWS_AS(flooding_sequence("12", 1), InvalidArgument);
}

TEST_CASE("verification reports") {
  SUBCASE("fixed yes") {
    const auto r = verify_reduction(instance({"1", "2"}, 2), Variant::fixed);
    CHECK(r.passed());
    CHECK(r.fixed_optimum == 7);
    CHECK_FALSE(r.partial);
    CHECK(find_claim(r, "constructive_sequence")->status == Claim::Status::pass);
  }
  SUBCASE("fixed no") {
    const auto r = verify_reduction(instance({"1", "2"}, 1), Variant::fixed);
    CHECK(r.passed());
    CHECK(r.scs.length == 2);
    REQUIRE(r.fixed_optimum.has_value());
    CHECK(*r.fixed_optimum > 5);
    CHECK(find_claim(r, "constructive_sequence")->status == Claim::Status::skipped);
  }
  SUBCASE("free") {
    const auto r = verify_reduction(instance({"1"}, 1), Variant::free);
    CHECK(r.passed());
    CHECK(r.crossing_regions == 11);
    CHECK(find_claim(r, "constructive_sequence")->status == Claim::Status::pass);
  }
  SUBCASE("over the size guard") {
    const auto r = verify_reduction(instance({"1212", "2121", "1122"}, 3), Variant::fixed);
    CHECK(r.partial);
    CHECK(find_claim(r, "equivalence")->status == Claim::Status::skipped);
  }
  CHECK(variant_from_string("free") == Variant::free);
  CHECK_THROWS_AS(variant_from_string("other"), InvalidArgument);
}
