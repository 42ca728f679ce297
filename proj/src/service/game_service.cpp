#include "flood/service/game_service.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <random>

#include "flood/board_paths.hpp"
#include "flood/connection_table.hpp"
#include "flood/oracle.hpp"

namespace flood::service {

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

bool valid_id(const std::string& id) {
  return !id.empty() && id.size() <= 64 &&
         std::all_of(id.begin(), id.end(), [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

}  // namespace

std::string new_session_id() {
  static std::mutex lock;
  static std::random_device device;
  std::lock_guard guard(lock);
  char buffer[33];
  for (int half = 0; half < 2; ++half) {
    const std::uint64_t bits = (static_cast<std::uint64_t>(device()) << 32) ^ device();
    std::snprintf(buffer + 16 * half, 17, "%016llx", static_cast<unsigned long long>(bits));
  }
  return std::string(buffer, 32);
}

GameService::GameService(ServiceConfig config) : config_(std::move(config)) {
  if (!config_.data_dir.empty()) std::filesystem::create_directories(config_.data_dir);
}

std::filesystem::path GameService::session_path(const std::string& id) const { return config_.data_dir / id; }

void GameService::persist(const GameSession& session) const {
  if (config_.data_dir.empty()) return;
  write_atomically(session_path(session.id), session_to_json(session));
}

std::shared_ptr<GameService::Entry> GameService::find(const std::string& id) const {
  {
    std::shared_lock read(sessions_lock_);
    if (auto it = sessions_.find(id); it != sessions_.end()) return it->second;
  }
  // Not in memory: fall back to the data directory (e.g. after a restart).
  if (!valid_id(id) || config_.data_dir.empty() || !std::filesystem::exists(session_path(id))) throw NotFound(id);
  GameSession loaded = session_from_json(read_json_file(session_path(id)));
  std::unique_lock write(sessions_lock_);
  auto [it, inserted] = sessions_.try_emplace(id, nullptr);
  if (inserted) it->second = std::make_shared<Entry>(std::move(loaded));
  return it->second;
}

GameSession GameService::create_game(const Board& board, GameVariant variant, std::optional<VertexId> pivot) {
  const VertexId pivot_cell = pivot.value_or(0);
  if (pivot_cell < 0 || pivot_cell >= board.cell_count()) throw InvalidArgument("pivot cell out of range");
  const std::string stamp = utc_now();
  GameSession session{new_session_id(), variant, pivot_cell, board, FloodState::from_board(board), {}, stamp, stamp};
  persist(session);
  std::unique_lock write(sessions_lock_);
  sessions_.emplace(session.id, std::make_shared<Entry>(session));
  return session;
}

GameSession GameService::get(const std::string& id) const {
  const auto entry = find(id);
  std::lock_guard guard(entry->lock);
  return entry->session;
}

GameSession GameService::play_move(const std::string& id, const Move& move) {
  const auto entry = find(id);
  std::lock_guard guard(entry->lock);
  GameSession next = entry->session;
  if (next.current.is_flooded() && !config_.allow_moves_after_flooded) throw Conflict("game is already flooded");
  if (next.variant == GameVariant::fixed) {
    const Move played = Move::pivot(move.colour);
    next.current = apply_fixed_move(next.current, next.pivot, played.colour);
    next.history.push_back(played);
  } else {
    next.current = apply_free_move(next.current, move);
    next.history.push_back(move);
  }
  next.updated = utc_now();
  persist(next);
  entry->session = std::move(next);
  return entry->session;
}

GameSession GameService::undo(const std::string& id) {
  const auto entry = find(id);
  std::lock_guard guard(entry->lock);
  GameSession next = entry->session;
  if (next.history.empty()) throw Conflict("nothing to undo");
  next.history.pop_back();
  next.current = replay(next);
  next.updated = utc_now();
  persist(next);
  entry->session = std::move(next);
  return entry->session;
}

Hint GameService::hint(const std::string& id) const { return compute_hint(get(id), config_); }

Analysis GameService::analysis(const std::string& id) const { return compute_analysis(get(id), config_); }

namespace {

bool exact_in_reach(const GameSession& session, const ServiceConfig& config) {
  return session.variant == GameVariant::free ? session.current.region_count() <= config.exact_region_threshold
                                              : session.initial_board.cell_count() <= config.exact_cell_threshold;
}

int exact_optimum(const GameSession& session, oracle::SolveResult* out = nullptr) {
  const FloodState& state = session.current;
  oracle::SolveResult result =
      session.variant == GameVariant::free
          ? oracle::solve_free_exact(state.graph(), std::nullopt, oracle::kDefaultBudget)
          : oracle::solve_fixed_exact(state.graph(), state.region_of(session.pivot), oracle::kDefaultBudget);
  const int optimum = result.optimum;
  if (out) *out = std::move(result);
  return optimum;
}

// Cells whose regions are paired up for connection-cost bounds: the four
// corners and the middle of each side.
std::vector<VertexId> border_samples(const Board& board) {
  const int h = board.height() - 1;
  const int w = board.width() - 1;
  std::vector<VertexId> cells{board.cell_id(0, 0), board.cell_id(0, w), board.cell_id(h, 0), board.cell_id(h, w),
                              board.cell_id(h / 2, 0), board.cell_id(h / 2, w), board.cell_id(0, w / 2),
                              board.cell_id(h, w / 2)};
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

struct Bounds {
  int link = 0;       // top-left to top-right
  int sampled = 0;    // best over sampled border pairs
  int crossing_regions = 1;
  int crossing = 0;
  int pivot = 0;      // fixed variant only
  int best() const { return std::max({link, sampled, crossing, pivot}); }
};

Bounds lower_bounds(const GameSession& session) {
  const FloodState& state = session.current;
  const Board& board = session.initial_board;
  Bounds b;
  if (state.is_flooded()) return b;

  const ConnectionTable table = compute_table(state.graph());
  b.link = query_link_any(table, state.region_of(board.cell_id(0, 0)),
                          state.region_of(board.cell_id(0, board.width() - 1))).first;
  const auto samples = border_samples(board);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      b.sampled = std::max(b.sampled, query_link_any(table, state.region_of(samples[i]), state.region_of(samples[j])).first);
  }
  // Every move shortens a crossing path by at most two regions.
  b.crossing_regions = min_crossing_regions(state, board);
  b.crossing = b.crossing_regions / 2;
  if (session.variant == GameVariant::fixed) {
    // A pivot move pulls every region at most one step closer.
    const auto dist = state.graph().distances_from(state.region_of(session.pivot));
    b.pivot = *std::max_element(dist.begin(), dist.end());
  }
  return b;
}

Move greedy_move(const GameSession& session) {
  const FloodState& state = session.current;
  const ColouredGraph& g = state.graph();
  auto absorbed = [&](VertexId v, int colour) {
    const auto around = g.neighbours(v);
    return static_cast<int>(std::count_if(around.begin(), around.end(), [&](VertexId w) { return g.colour(w).value == colour; }));
  };
  if (session.variant == GameVariant::fixed) {
    const VertexId home = state.region_of(session.pivot);
    int best_colour = -1;
    int best_gain = -1;
    for (int d = 0; d < g.colour_count(); ++d) {
      if (d == g.colour(home).value) continue;
      if (const int gain = absorbed(home, d); gain > best_gain) {
        best_gain = gain;
        best_colour = d;
      }
    }
    return Move::pivot(ColourId{best_colour});
  }
  Move best = Move::at(state.representative(0), ColourId{0});
  int best_gain = -1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (int d = 0; d < g.colour_count(); ++d) {
      if (d == g.colour(v).value) continue;
      if (const int gain = absorbed(v, d); gain > best_gain) {
        best_gain = gain;
        best = Move::at(state.representative(v), ColourId{d});
      }
    }
  }
  return best;
}

}  // namespace

Hint compute_hint(const GameSession& session, const ServiceConfig& config) {
  const FloodState& state = session.current;
  if (state.is_flooded()) throw Conflict("game is already flooded");

  Hint hint;
  if (exact_in_reach(session, config)) {
    oracle::SolveResult result;
    hint.bound_value = exact_optimum(session, &result);
    hint.bound_kind = Hint::BoundKind::exact;
    const Move& first = result.witness.front();
    hint.suggested = session.variant == GameVariant::free
                         ? Move::at(state.representative(*first.vertex), first.colour)
                         : Move::pivot(first.colour);
    return hint;
  }
  hint.suggested = greedy_move(session);
  hint.bound_kind = Hint::BoundKind::lower;
  hint.bound_value = lower_bounds(session).best();
  return hint;
}

Analysis compute_analysis(const GameSession& session, const ServiceConfig& config) {
  const FloodState& state = session.current;
  Analysis a;
  a.region_count = state.region_count();
  std::vector<bool> seen(static_cast<std::size_t>(state.graph().colour_count()), false);
  for (ColourId c : state.graph().colours()) seen[static_cast<std::size_t>(c.value)] = true;
  for (int d = 0; d < state.graph().colour_count(); ++d) {
    if (seen[static_cast<std::size_t>(d)]) a.colours_present.push_back(ColourId{d});
  }
  const Bounds b = lower_bounds(session);
  a.link_lower_bound = b.link;
  a.crossing_regions = b.crossing_regions;
  a.crossing_lower_bound = b.crossing;
  a.lower_bound = b.best();
  if (exact_in_reach(session, config)) a.optimum = exact_optimum(session);
  return a;
}

io::Json hint_to_json(const Hint& hint) {
  return {{"suggested", io::move_to_json(hint.suggested)},
          {"bound_kind", hint.bound_kind == Hint::BoundKind::exact ? "exact" : "lower"},
          {"bound_value", hint.bound_value}};
}

io::Json analysis_to_json(const Analysis& a) {
  io::Json colours = io::Json::array();
  for (ColourId c : a.colours_present) colours.push_back(io::to_label(c));
  io::Json j = {{"region_count", a.region_count},
                {"colours_present", colours},
                {"link_lower_bound", a.link_lower_bound},
                {"crossing_regions", a.crossing_regions},
                {"crossing_lower_bound", a.crossing_lower_bound},
                {"lower_bound", a.lower_bound},
                {"optimum", nullptr}};
  if (a.optimum) j["optimum"] = *a.optimum;
  return j;
}

}  // namespace flood::service
