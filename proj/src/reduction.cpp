#include "flood/reduction.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "flood/board_paths.hpp"
#include "flood/error.hpp"
#include "flood/flood_state.hpp"
#include "flood/oracle.hpp"

namespace flood::reduction {

namespace {

constexpr ColourId kOne{0};
constexpr ColourId kTwo{1};
constexpr ColourId kThree{2};
constexpr ColourId kFour{3};
constexpr int kBoardColours = 4;

using Column = std::array<ColourId, 3>;

ColourId letter(char c) { return c == '1' ? kOne : kTwo; }

void push_gadget(std::vector<Column>& cols, const std::string& s) {
  const int m = static_cast<int>(s.size());
  cols.push_back({kThree, kFour, kFour});
  for (int j = 1; j <= 2 * m; ++j) {
    const int from_right = 2 * m - j;
    const ColourId bottom = from_right % 2 == 0 ? letter(s[static_cast<std::size_t>(from_right / 2)]) : kThree;
    cols.push_back({kThree, kFour, bottom});
  }
}

std::vector<Column> terminal_columns(int l) {
  std::vector<Column> cols;
  for (int t = 0; t < l; ++t) {
    cols.push_back({kOne, kTwo, kOne});
    cols.push_back({kThree, kThree, kThree});
  }
  cols.push_back({kFour, kFour, kFour});
  cols.push_back({kTwo, kTwo, kTwo});
  cols.push_back({kOne, kOne, kOne});
  return cols;
}

Board assemble(const std::vector<Column>& cols) {
  const int width = static_cast<int>(cols.size());
  std::vector<ColourId> cells(static_cast<std::size_t>(3 * width));
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < width; ++c)
      cells[static_cast<std::size_t>(r * width + c)] = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
  }
  return Board(3, width, kBoardColours, std::move(cells));
}

// Gadgets, separators and R, with spans offset by `first_col`.
std::vector<Column> fixed_columns(const ScsInstance& instance, int first_col, std::vector<Span>& spans) {
  std::vector<Column> cols;
  for (std::size_t i = 0; i < instance.strings.size(); ++i) {
    const int start = first_col + static_cast<int>(cols.size());
    push_gadget(cols, instance.strings[i]);
    spans.push_back({"G" + std::to_string(i + 1), start, first_col + static_cast<int>(cols.size()) - 1});
    cols.push_back({kThree, kThree, kThree});
  }
  const int start = first_col + static_cast<int>(cols.size());
  const auto r = terminal_columns(instance.l);
  cols.insert(cols.end(), r.begin(), r.end());
  spans.push_back({"R", start, first_col + static_cast<int>(cols.size()) - 1});
  return cols;
}

}  // namespace

void ScsInstance::validate() const {
  if (strings.empty()) throw InvalidArgument("instance needs at least one string");
  if (l < 0) throw InvalidArgument("target length must be non-negative");
  for (const auto& s : strings) {
    if (std::any_of(s.begin(), s.end(), [](char c) { return c != '1' && c != '2'; }))
      throw InvalidArgument("string \"" + s + "\" has characters outside {1,2}");
  }
}

int ScsInstance::max_length() const {
  std::size_t w = 0;
  for (const auto& s : strings) w = std::max(w, s.size());
  return static_cast<int>(w);
}

ScsResult scs_exact(const std::vector<std::string>& strings, std::size_t max_states) {
  for (const auto& s : strings) {
    if (s.find_first_not_of("12") != std::string::npos) throw InvalidArgument("strings must be over {1,2}");
  }
  std::vector<std::size_t> stride(strings.size());
  std::size_t states = 1;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    stride[i] = states;
    const std::size_t radix = strings[i].size() + 1;
    if (states > max_states / radix) throw BudgetExceeded(static_cast<int>(std::min<std::size_t>(max_states, std::numeric_limits<int>::max())));
    states *= radix;
  }

  auto position = [&](std::size_t index, std::size_t i) { return (index / stride[i]) % (strings[i].size() + 1); };
  // Index of the state reached by emitting `c`; equal to `index` if no
  // string can consume it.
  auto advance = [&](std::size_t index, char c) {
    std::size_t next = index;
    for (std::size_t i = 0; i < strings.size(); ++i) {
      const std::size_t p = position(index, i);
      if (p < strings[i].size() && strings[i][p] == c) next += stride[i];
    }
    return next;
  };

  // Successors have strictly larger indices, so fill from the top down.
  std::vector<int> length(states, 0);
  for (std::size_t index = states; index-- > 0;) {
    int best = std::numeric_limits<int>::max();
    for (char c : {'1', '2'}) {
      const std::size_t next = advance(index, c);
      if (next != index) best = std::min(best, 1 + length[next]);
    }
    length[index] = best == std::numeric_limits<int>::max() ? 0 : best;
  }

  ScsResult result{length[0], {}};
  for (std::size_t index = 0; length[index] > 0;) {
    for (char c : {'1', '2'}) {
      const std::size_t next = advance(index, c);
      if (next != index && length[next] + 1 == length[index]) {
        result.witness.push_back(c);
        index = next;
        break;
      }
    }
  }
  return result;
}

ReductionBoard build_fixed_board(const ScsInstance& instance) {
  instance.validate();
  ReductionBoard out;
  out.variant = Variant::fixed;
  out.board = assemble(fixed_columns(instance, 0, out.gadget_spans));
  out.claimed_threshold = 2 * instance.l + 3;
  out.external_cell = 0;
  return out;
}

ReductionBoard build_free_board(const ScsInstance& instance) {
  instance.validate();
  auto mirrored = terminal_columns(instance.l);
  std::reverse(mirrored.begin(), mirrored.end());
  mirrored.push_back({kThree, kThree, kThree});

  ReductionBoard out;
  out.variant = Variant::free;
  const int offset = static_cast<int>(mirrored.size());
  out.gadget_spans.push_back({"R'", 0, offset - 1});
  auto rest = fixed_columns(instance, offset, out.gadget_spans);
  mirrored.insert(mirrored.end(), rest.begin(), rest.end());
  out.board = assemble(mirrored);
  out.claimed_threshold = 2 * instance.l + 3;
  out.external_cell = out.board.cell_id(0, offset - 1);
  return out;
}

Board terminal_section_board(int l) {
  if (l < 0) throw InvalidArgument("target length must be non-negative");
  std::vector<Column> cols{{kThree, kThree, kThree}};
  const auto r = terminal_columns(l);
  cols.insert(cols.end(), r.begin(), r.end());
  return assemble(cols);
}

std::vector<ColourId> flooding_sequence(const std::string& supersequence, int l) {
  if (static_cast<int>(supersequence.size()) > l)
    throw InvalidArgument("supersequence longer than the target length");
  std::string padded = supersequence;
  padded.resize(static_cast<std::size_t>(l), '1');
  std::vector<ColourId> moves;
  for (char c : padded) {
    moves.push_back(letter(c));
    moves.push_back(kThree);
  }
  moves.insert(moves.end(), {kFour, kTwo, kOne});
  return moves;
}

bool ReductionReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == Claim::Status::fail; });
}

namespace {

Claim check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Claim::Status::pass : Claim::Status::fail, std::move(detail)};
}

Claim skip(std::string name, std::string detail) { return {std::move(name), Claim::Status::skipped, std::move(detail)}; }

}  // namespace

ReductionReport verify_reduction(const ScsInstance& instance, Variant variant, const VerifyOptions& options) {
  instance.validate();
  ReductionReport report;
  report.instance = instance;
  report.variant = variant;
  report.scs = scs_exact(instance.strings);
  report.board = variant == Variant::fixed ? build_fixed_board(instance) : build_free_board(instance);

  const int l = instance.l;
  const int threshold = 2 * l + 3;
  const int k = static_cast<int>(instance.strings.size());
  const int w = instance.max_length();
  const Board& board = report.board.board;
  const bool has_short_supersequence = report.scs.length <= l;

  const int width_bound = variant == Variant::fixed ? k * (2 * w + 2) + 2 * l + 3 : k * (2 * w + 2) + 4 * l + 7;
  report.claims.push_back(check("width_bound", board.width() <= width_bound,
                                "width " + std::to_string(board.width()) + " <= " + std::to_string(width_bound)));

  const FloodState start = FloodState::from_board(board);
  const VertexId external = report.board.external_cell;

  if (variant == Variant::fixed) {
    if (board.cell_count() > options.max_cells) {
      report.partial = true;
      report.claims.push_back(skip("lower_bound", "board exceeds the exact-solver size guard"));
      report.claims.push_back(skip("equivalence", "board exceeds the exact-solver size guard"));
    } else {
      const int budget = options.budget.value_or(threshold + 2);
      try {
        report.fixed_optimum = oracle::solve_fixed_exact(board.cell_graph(), external, budget).optimum;
      } catch (const BudgetExceeded&) {
        report.optimum_exceeds_budget = true;
      }
      const std::string found = report.fixed_optimum ? "m_fixed = " + std::to_string(*report.fixed_optimum)
                                                     : "m_fixed > " + std::to_string(budget);
      const bool at_least = report.optimum_exceeds_budget || *report.fixed_optimum >= threshold;
      const bool within = !report.optimum_exceeds_budget && *report.fixed_optimum <= threshold;
      const bool exactly = report.fixed_optimum && *report.fixed_optimum == threshold;
      report.claims.push_back(check("lower_bound", at_least, found + ", threshold " + std::to_string(threshold)));
      report.claims.push_back(check("equivalence", within == has_short_supersequence && exactly == has_short_supersequence,
                                    found + ", scs = " + std::to_string(report.scs.length) + ", l = " + std::to_string(l)));
    }
  } else {
    report.crossing_regions = min_crossing_regions(board);
    report.claims.push_back(check("crossing_regions", *report.crossing_regions == 4 * l + 7,
                                  std::to_string(*report.crossing_regions) + " regions, expected " +
                                      std::to_string(4 * l + 7)));
    // Each move merges at most three consecutive regions of a crossing path.
    const int implied = *report.crossing_regions / 2;
    report.claims.push_back(check("crossing_lower_bound", implied >= threshold,
                                  "floor(" + std::to_string(*report.crossing_regions) + " / 2) = " +
                                      std::to_string(implied) + " >= " + std::to_string(threshold)));

    const ReductionBoard fixed = build_fixed_board(instance);
    const int offset = report.board.gadget_spans.front().last_col + 1;
    bool same = board.width() - offset == fixed.board.width();
    for (int r = 0; same && r < 3; ++r) {
      for (int c = 0; same && c < fixed.board.width(); ++c) same = board.at(r, offset + c) == fixed.board.at(r, c);
    }
    report.claims.push_back(check("shares_fixed_board", same, "columns after R' match the fixed board"));
  }

  if (has_short_supersequence) {
    const auto sequence = flooding_sequence(report.scs.witness, l);
    std::vector<Move> moves;
    for (ColourId c : sequence)
      moves.push_back(variant == Variant::fixed ? Move::pivot(c) : Move::at(external, c));
    const FloodState end = apply_sequence(start, moves, external);
    report.claims.push_back(check("constructive_sequence", end.is_flooded() && static_cast<int>(moves.size()) == threshold,
                                  std::to_string(moves.size()) + " moves, " +
                                      (end.is_flooded() ? "board flooded" : std::to_string(end.region_count()) + " regions left")));
  } else {
    report.claims.push_back(skip("constructive_sequence", "no common supersequence of length <= l"));
  }
  return report;
}

std::string to_string(Variant variant) { return variant == Variant::fixed ? "fixed" : "free"; }

Variant variant_from_string(const std::string& name) {
  if (name == "fixed") return Variant::fixed;
  if (name == "free") return Variant::free;
  throw InvalidArgument("variant must be \"fixed\" or \"free\"");
}

std::string to_string(Claim::Status status) {
  switch (status) {
    case Claim::Status::pass: return "pass";
    case Claim::Status::fail: return "fail";
    case Claim::Status::skipped: return "skipped";
  }
  return "unknown";
}

}  // namespace flood::reduction
