#pragma once

// JSON encodings shared by the CLI and the game service. Colours are
// 1-based on the wire and 0-based in memory; vertex and cell ids are 0-based.

#include <json.hpp>

#include "flood/graph.hpp"

namespace flood::io {

using Json = nlohmann::json;

/// {"height":k,"width":n,"colours":c,"cells":[row-major ints]}
Board board_from_json(const Json& j);
Json board_to_json(const Board& board);

/// {"colours":c,"vertices":[colour ints],"edges":[[u,v],...]}
ColouredGraph graph_from_json(const Json& j);
Json graph_to_json(const ColouredGraph& graph);

/// {"vertex":id,"colour":c}; fixed-variant moves omit "vertex".
Move move_from_json(const Json& j);
Json move_to_json(const Move& move);

inline int to_label(ColourId c) { return c.value + 1; }
ColourId from_label(const Json& label, int colour_count);

}  // namespace flood::io
