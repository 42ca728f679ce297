#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "flood/service/game_service.hpp"

namespace httplib {
class Server;
}

namespace flood::service {

/// JSON-over-HTTP front end for a GameService.
///
///   POST /games                {board, variant, pivot?}   -> 201 session
///   GET  /games/{id}                                      -> session
///   POST /games/{id}/moves     {vertex?, colour}          -> session
///   POST /games/{id}/undo                                 -> session
///   GET  /games/{id}/hint                                 -> hint
///   GET  /games/{id}/analysis                             -> analysis
///
/// Errors are {"error": message} with 400 (bad input), 404 (unknown id) or
/// 409 (wrong game state).
class HttpApi {
 public:
  explicit HttpApi(GameService& service, std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~HttpApi();
  HttpApi(const HttpApi&) = delete;
  HttpApi& operator=(const HttpApi&) = delete;

  /// Bind to `port` (0 picks a free one); returns the bound port.
  int bind(const std::string& host, int port);
  /// Serve until stop() is called.
  void listen();
  void stop();

 private:
  GameService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace flood::service
