#include "flood/service/http_api.hpp"

#include <httplib.h>

namespace flood::service {

namespace {

void send_json(httplib::Response& res, const io::Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  send_json(res, {{"error", message}}, status);
}

// Runs a handler and maps service exceptions onto HTTP status codes.
template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const NotFound& e) {
      send_error(res, 404, e.what());
    } catch (const Conflict& e) {
      send_error(res, 409, e.what());
    } catch (const InvalidArgument& e) {
      send_error(res, 400, e.what());
    } catch (const io::Json::exception& e) {
      send_error(res, 400, std::string("malformed request: ") + e.what());
    } catch (const BudgetExceeded& e) {
      send_error(res, 503, e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, e.what());
    }
  };
}

io::Json body_of(const httplib::Request& req) {
  if (req.body.empty()) return io::Json::object();
  io::Json body = io::Json::parse(req.body);
  if (!body.is_object()) throw InvalidArgument("request body must be a JSON object");
  return body;
}

}  // namespace

HttpApi::HttpApi(GameService& service, std::optional<std::filesystem::path> static_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  s.Post("/games", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const io::Json body = body_of(req);
    const Board board = io::board_from_json(body.at("board"));
    const GameVariant variant = game_variant_from_string(body.value("variant", std::string("free")));
    std::optional<VertexId> pivot;
    if (body.contains("pivot") && !body.at("pivot").is_null()) pivot = body.at("pivot").get<VertexId>();
    send_json(res, session_to_json(service_.create_game(board, variant, pivot)), 201);
  }));
  s.Get(R"(/games/([0-9a-zA-Z]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
    send_json(res, session_to_json(service_.get(req.matches[1])));
  }));
  s.Post(R"(/games/([0-9a-zA-Z]+)/moves)", guarded([this](const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    const GameSession session = service_.get(id);
    Move move = io::move_from_json(body_of(req));
    // Range check here so the message names the wire label.
    io::from_label(move.colour.value + 1, session.initial_board.colour_count());
    send_json(res, session_to_json(service_.play_move(id, move)));
  }));
  s.Post(R"(/games/([0-9a-zA-Z]+)/undo)", guarded([this](const httplib::Request& req, httplib::Response& res) {
    send_json(res, session_to_json(service_.undo(req.matches[1])));
  }));
  s.Get(R"(/games/([0-9a-zA-Z]+)/hint)", guarded([this](const httplib::Request& req, httplib::Response& res) {
    send_json(res, hint_to_json(service_.hint(req.matches[1])));
  }));
  s.Get(R"(/games/([0-9a-zA-Z]+)/analysis)", guarded([this](const httplib::Request& req, httplib::Response& res) {
    send_json(res, analysis_to_json(service_.analysis(req.matches[1])));
  }));
  if (static_dir && !s.set_mount_point("/", static_dir->string()))
    throw InvalidArgument("static directory not found: " + static_dir->string());
}

HttpApi::~HttpApi() = default;

int HttpApi::bind(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpApi::listen() { server_->listen_after_bind(); }

void HttpApi::stop() { server_->stop(); }

}  // namespace flood::service
