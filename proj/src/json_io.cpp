#include "flood/json_io.hpp"

#include <string>

#include "flood/error.hpp"

namespace flood::io {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw InvalidArgument(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

ColourId from_label(const Json& label, int colour_count) {
  if (!label.is_number_integer()) throw InvalidArgument("colour labels must be integers");
  const int value = label.get<int>();
  if (value < 1 || value > colour_count)
    throw InvalidArgument("colour label " + std::to_string(value) + " outside 1.." + std::to_string(colour_count));
  return ColourId{value - 1};
}

Board board_from_json(const Json& j) {
  const int height = require_int(j, "height");
  const int width = require_int(j, "width");
  const int colours = require_int(j, "colours");
  const Json& cells = require(j, "cells");
  if (!cells.is_array()) throw InvalidArgument("\"cells\" must be an array");
  if (colours < 1 || colours > kMaxColours) throw InvalidArgument("\"colours\" out of range");
  std::vector<ColourId> ids;
  ids.reserve(cells.size());
  for (const auto& label : cells) ids.push_back(from_label(label, colours));
  return Board(height, width, colours, std::move(ids));
}

Json board_to_json(const Board& board) {
  Json cells = Json::array();
  for (ColourId c : board.cells()) cells.push_back(to_label(c));
  return {{"height", board.height()}, {"width", board.width()}, {"colours", board.colour_count()}, {"cells", cells}};
}

ColouredGraph graph_from_json(const Json& j) {
  const int colours = require_int(j, "colours");
  if (colours < 1 || colours > kMaxColours) throw InvalidArgument("\"colours\" out of range");
  const Json& vertices = require(j, "vertices");
  const Json& edges = require(j, "edges");
  if (!vertices.is_array() || !edges.is_array()) throw InvalidArgument("\"vertices\" and \"edges\" must be arrays");
  std::vector<ColourId> ids;
  ids.reserve(vertices.size());
  for (const auto& label : vertices) ids.push_back(from_label(label, colours));
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InvalidArgument("edges must be [u,v] integer pairs");
    list.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  return ColouredGraph(colours, std::move(ids), std::move(list));
}

Json graph_to_json(const ColouredGraph& graph) {
  Json vertices = Json::array();
  for (ColourId c : graph.colours()) vertices.push_back(to_label(c));
  Json edges = Json::array();
  for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
  return {{"colours", graph.colour_count()}, {"vertices", vertices}, {"edges", edges}};
}

Move move_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("move must be an object");
  Move move;
  // Range checking of the colour needs the game's colour count; keep the
  // raw label here and let the caller validate via the state.
  const Json& colour = require(j, "colour");
  if (!colour.is_number_integer()) throw InvalidArgument("\"colour\" must be an integer");
  move.colour = ColourId{colour.get<int>() - 1};
  if (j.contains("vertex") && !j.at("vertex").is_null()) {
    if (!j.at("vertex").is_number_integer()) throw InvalidArgument("\"vertex\" must be an integer");
    move.vertex = j.at("vertex").get<VertexId>();
  }
  return move;
}

Json move_to_json(const Move& move) {
  Json j = {{"colour", to_label(move.colour)}};
  if (move.vertex) j["vertex"] = *move.vertex;
  return j;
}

}  // namespace flood::io
