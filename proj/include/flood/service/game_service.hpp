#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "flood/error.hpp"
#include "flood/flood_state.hpp"
#include "flood/graph.hpp"
#include "flood/json_io.hpp"

namespace flood::service {

enum class GameVariant { free, fixed };

std::string to_string(GameVariant variant);
GameVariant game_variant_from_string(const std::string& name);

/// Unknown session id.
class NotFound : public Error {
 public:
  explicit NotFound(const std::string& id) : Error("no game with id " + id) {}
};

/// The request is well formed but the game is in the wrong state for it
/// (already flooded, nothing to undo).
class Conflict : public Error {
 public:
  using Error::Error;
};

struct GameSession {
  std::string id;
  GameVariant variant = GameVariant::free;
  /// Cell every fixed-variant move is played at.
  VertexId pivot = 0;
  Board initial_board;
  FloodState current;
  /// Fixed-variant moves carry no vertex.
  std::vector<Move> history;
  std::string created;
  std::string updated;
};

/// Rebuild the position from the initial board and the move history.
FloodState replay(const GameSession& session);

io::Json session_to_json(const GameSession& session);
/// Current state is recomputed by replay; throws Error if it disagrees
/// with the stored "current" block.
GameSession session_from_json(const io::Json& j);
/// The stored "current" block for a state (cell colours, regions, counts).
io::Json state_to_json(const FloodState& state);

/// Write `doc` to `path` through a temporary sibling and a rename.
void write_atomically(const std::filesystem::path& path, const io::Json& doc);
io::Json read_json_file(const std::filesystem::path& path);

struct Hint {
  enum class BoundKind { exact, lower };
  Move suggested;
  BoundKind bound_kind = BoundKind::lower;
  /// Optimal remaining moves (exact) or a lower bound on them.
  int bound_value = 0;
};

io::Json hint_to_json(const Hint& hint);

struct Analysis {
  int region_count = 0;
  std::vector<ColourId> colours_present;
  /// m(u, v) between the regions of the top-left and top-right cells.
  int link_lower_bound = 0;
  /// Fewest regions on a left-to-right path, and ceil((that - 1) / 2).
  int crossing_regions = 0;
  int crossing_lower_bound = 0;
  int lower_bound = 0;
  std::optional<int> optimum;
};

io::Json analysis_to_json(const Analysis& analysis);

struct ServiceConfig {
  std::filesystem::path data_dir;
  /// Exact hints and analysis run at or below these sizes.
  int exact_region_threshold = 12;
  int exact_cell_threshold = 40;
  bool allow_moves_after_flooded = false;
};

/// Sessions held in memory and mirrored to one JSON document per session
/// under `data_dir` (written to a temporary file, then renamed). Mutations
/// of one session are serialised by a per-session lock.
class GameService {
 public:
  explicit GameService(ServiceConfig config);

  GameSession create_game(const Board& board, GameVariant variant, std::optional<VertexId> pivot = std::nullopt);
  GameSession get(const std::string& id) const;
  GameSession play_move(const std::string& id, const Move& move);
  GameSession undo(const std::string& id);
  Hint hint(const std::string& id) const;
  Analysis analysis(const std::string& id) const;

  const ServiceConfig& config() const noexcept { return config_; }
  std::filesystem::path session_path(const std::string& id) const;

 private:
  struct Entry {
    explicit Entry(GameSession s) : session(std::move(s)) {}
    mutable std::mutex lock;
    GameSession session;
  };

  std::shared_ptr<Entry> find(const std::string& id) const;
  void persist(const GameSession& session) const;

  ServiceConfig config_;
  mutable std::shared_mutex sessions_lock_;
  mutable std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

/// 128 random bits, lowercase hex.
std::string new_session_id();

Hint compute_hint(const GameSession& session, const ServiceConfig& config);
Analysis compute_analysis(const GameSession& session, const ServiceConfig& config);

}  // namespace flood::service
