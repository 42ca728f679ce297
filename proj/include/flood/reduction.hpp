#pragma once

// Shortest Common Supersequence instances over {1,2} compiled into 3 x n
// four-colour boards, with an exact SCS solver and a desk-scale checker
// for the equivalences the boards are built to satisfy.
//
// Board layout (labels 1..4, background 3). For each string s a 2-row
// gadget of width 2|s|+1 sits under a colour-3 top row:
//
//   row 0:  3 3 3 3 3 ... 3
//   row 1:  4 4 4 4 4 ... 4
//   row 2:  4 3 s_m 3 ... 3 s_1      (s read right to left, interleaved with 3)
//
// Its bottom row can only be entered from the colour-3 column to its
// right, one cell per move. Gadgets are each followed by a colour-3
// column. The terminal section R has 2l+3 columns:
//
//   M 3 M 3 ... M 3 4 2 1     with M the column (1,2,1)
//
// so that every move advances into R by at most one column. The free
// board puts R mirrored, plus a colour-3 spacer on its inner side, in front.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flood/graph.hpp"

namespace flood::reduction {

enum class Variant { fixed, free };

struct ScsInstance {
  std::vector<std::string> strings;  // characters '1' and '2'
  int l = 0;

  /// Throws InvalidArgument on an empty string set, a negative target or
  /// a character outside {1,2}.
  void validate() const;
  int max_length() const;
};

struct ScsResult {
  int length = 0;
  std::string witness;
};

/// Exact SCS by dynamic programming over position vectors. Ties prefer '1'.
/// Throws BudgetExceeded when the lattice has more than `max_states` points.
ScsResult scs_exact(const std::vector<std::string>& strings, std::size_t max_states = 1'000'000);

struct Span {
  std::string name;  // "G1".."Gk", "R", "R'"
  int first_col = 0;
  int last_col = 0;
};

struct ReductionBoard {
  Board board;
  Variant variant = Variant::fixed;
  std::vector<Span> gadget_spans;
  int claimed_threshold = 0;  // 2l + 3
  /// A cell of the colour-3 external area; the top-left cell for the fixed board.
  VertexId external_cell = 0;
};

ReductionBoard build_fixed_board(const ScsInstance& instance);
ReductionBoard build_free_board(const ScsInstance& instance);

/// A colour-3 column followed by R alone; pivot is the top-left cell.
Board terminal_section_board(int l);

/// a_1 3 a_2 3 ... a_l 3 4 2 1 as 0-based colours, with the supersequence
/// padded to length l with 1s. Throws InvalidArgument if it is longer than l.
std::vector<ColourId> flooding_sequence(const std::string& supersequence, int l);

struct Claim {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::skipped;
  std::string detail;
};

struct VerifyOptions {
  /// Exact fixed-variant solving only runs on boards up to this many cells.
  int max_cells = 75;
  /// Move budget for the exact solver; defaults to 2l + 5.
  std::optional<int> budget;
};

struct ReductionReport {
  ScsInstance instance;
  Variant variant = Variant::fixed;
  ScsResult scs;
  ReductionBoard board;
  /// Exact m_fixed(B) when found within budget.
  std::optional<int> fixed_optimum;
  /// The exact solver ran out of budget: m_fixed(B) > budget.
  bool optimum_exceeds_budget = false;
  /// Some claims were skipped because the instance was over the size guard.
  bool partial = false;
  std::optional<int> crossing_regions;
  std::vector<Claim> claims;

  /// No claim failed (skipped claims do not count against it).
  bool passed() const;
};

ReductionReport verify_reduction(const ScsInstance& instance, Variant variant, const VerifyOptions& options = {});

std::string to_string(Variant variant);
Variant variant_from_string(const std::string& name);
std::string to_string(Claim::Status status);

}  // namespace flood::reduction
