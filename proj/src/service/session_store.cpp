// Session documents: JSON encoding and crash-safe file IO.

#include <fstream>
#include <system_error>

#include "flood/service/game_service.hpp"

namespace flood::service {

std::string to_string(GameVariant variant) { return variant == GameVariant::free ? "free" : "fixed"; }

GameVariant game_variant_from_string(const std::string& name) {
  if (name == "free") return GameVariant::free;
  if (name == "fixed") return GameVariant::fixed;
  throw InvalidArgument("variant must be \"free\" or \"fixed\"");
}

FloodState replay(const GameSession& session) {
  const FloodState start = FloodState::from_board(session.initial_board);
  const auto pivot = session.variant == GameVariant::fixed ? std::optional<VertexId>(session.pivot) : std::nullopt;
  return apply_sequence(start, session.history, pivot);
}

io::Json state_to_json(const FloodState& state) {
  io::Json cells = io::Json::array();
  for (ColourId c : state.original_colouring()) cells.push_back(io::to_label(c));
  io::Json regions = io::Json::array();
  for (VertexId r : state.region_map()) regions.push_back(r);
  return {{"cells", cells},
          {"regions", regions},
          {"region_count", state.region_count()},
          {"moves_played", state.moves_played()},
          {"flooded", state.is_flooded()}};
}

io::Json session_to_json(const GameSession& session) {
  io::Json history = io::Json::array();
  for (const Move& m : session.history) history.push_back(io::move_to_json(m));
  io::Json j = {{"id", session.id},
                {"variant", to_string(session.variant)},
                {"pivot", nullptr},
                {"initial_board", io::board_to_json(session.initial_board)},
                {"history", history},
                {"current", state_to_json(session.current)},
                {"created", session.created},
                {"updated", session.updated}};
  if (session.variant == GameVariant::fixed) j["pivot"] = session.pivot;
  return j;
}

GameSession session_from_json(const io::Json& j) {
  try {
    const Board board = io::board_from_json(j.at("initial_board"));
    std::vector<Move> history;
    for (const auto& m : j.at("history")) {
      Move move = io::move_from_json(m);
      if (move.colour.value < 0 || move.colour.value >= board.colour_count())
        throw InvalidArgument("stored move has a colour outside the colour set");
      history.push_back(move);
    }
    const GameVariant variant = game_variant_from_string(j.at("variant").get<std::string>());
    const VertexId pivot = variant == GameVariant::fixed ? j.at("pivot").get<VertexId>() : 0;
    GameSession session{j.at("id").get<std::string>(),
                        variant,
                        pivot,
                        board,
                        FloodState::from_board(board),
                        std::move(history),
                        j.value("created", std::string{}),
                        j.value("updated", std::string{})};
    session.current = replay(session);
    if (j.contains("current") && state_to_json(session.current) != j.at("current"))
      throw Error("stored state of game " + session.id + " does not match its history");
    return session;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed session document: ") + e.what());
  }
}

void write_atomically(const std::filesystem::path& path, const io::Json& doc) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + temp.string());
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) throw Error("short write to " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) throw Error("cannot rename " + temp.string() + ": " + ec.message());
}

io::Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  try {
    return io::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

}  // namespace flood::service
