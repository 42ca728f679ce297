// floodctl: command-line front end for the solvers, the reduction
// generator and the game server.

#include <CLI11.hpp>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "flood/connection_table.hpp"
#include "flood/flood_state.hpp"
#include "flood/json_io.hpp"
#include "flood/oracle.hpp"
#include "flood/poly_solvers.hpp"
#include "flood/random.hpp"
#include "flood/reduction.hpp"
#include "flood/service/game_service.hpp"
#include "flood/service/http_api.hpp"

namespace {

using flood::io::Json;

Json read_input(const std::string& path) {
  if (path.empty() || path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw flood::InvalidArgument("cannot open " + path);
  return Json::parse(in);
}

bool is_board(const Json& j) { return j.is_object() && j.contains("height"); }

flood::ColouredGraph graph_of(const Json& j) {
  return is_board(j) ? flood::io::board_from_json(j).cell_graph() : flood::io::graph_from_json(j);
}

Json moves_to_json(const std::vector<flood::Move>& moves) {
  Json out = Json::array();
  for (const auto& m : moves) out.push_back(flood::io::move_to_json(m));
  return out;
}

std::optional<flood::ColourId> colour_option(const std::optional<int>& label, int colour_count) {
  if (!label) return std::nullopt;
  return flood::io::from_label(*label, colour_count);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

flood::service::HttpApi* running_api = nullptr;

void on_signal(int) {
  if (running_api) running_api->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flood-It solvers, approximation, hardness boards and game server"};
  app.require_subcommand(1);

  std::string input;
  std::string variant = "free";
  std::optional<int> pivot;
  std::optional<int> target;
  int budget = flood::oracle::kDefaultBudget;

  auto* solve = app.add_subcommand("solve", "Exact optimum of a board or graph (JSON)");
  solve->add_option("input", input, "JSON file, or - for stdin")->default_val("-");
  solve->add_option("--variant", variant, "free or fixed")->check(CLI::IsMember({"free", "fixed"}));
  solve->add_option("--pivot", pivot, "Pivot vertex for the fixed variant (default 0)");
  solve->add_option("--target", target, "Flood colour (free variant)");
  solve->add_option("--budget", budget, "Give up beyond this many moves");

  std::optional<int> u;
  std::optional<int> v;
  std::optional<int> colour;
  bool all_pairs = false;
  bool exact = false;
  auto* link = app.add_subcommand("link", "Connection cost m(u, v, d) from the dynamic programme");
  link->add_option("input", input, "JSON file, or - for stdin")->default_val("-");
  link->add_option("--u", u, "First vertex");
  link->add_option("--v", v, "Second vertex");
  link->add_option("--colour", colour, "Colour d (omit for the minimum over colours)");
  link->add_flag("--all", all_pairs, "Emit every (u, v, d) entry of the table");
  link->add_flag("--exact", exact, "Use the exhaustive search instead of the table");
  link->add_option("--budget", budget, "Search budget for --exact");

  auto* approx = app.add_subcommand("approx", "Additive approximation for a k x n board");
  approx->add_option("input", input, "Board JSON file, or - for stdin")->default_val("-");

  auto* reduce = app.add_subcommand("reduce", "Build the board for an SCS instance {strings, l, variant}");
  reduce->add_option("input", input, "Instance JSON file, or - for stdin")->default_val("-");

  int max_cells = 75;
  auto* verify = app.add_subcommand("verify", "Check a reduction instance at desk scale");
  verify->add_option("input", input, "Instance JSON file, or - for stdin")->default_val("-");
  verify->add_option("--max-cells", max_cells, "Largest board solved exactly");
  verify->add_option("--budget", budget, "Oracle budget (default 2l+5)");

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string data_dir = "games";
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP game server");
  serve->add_option("--port", port, "Port (0 picks a free one)");
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--data-dir", data_dir, "Directory holding one JSON file per game");
  serve->add_option("--static-dir", static_dir, "Serve static files (the web UI) from here");

  int height = 0;
  int width = 0;
  int colours = 0;
  std::uint64_t seed = 0;
  auto* rand_board = app.add_subcommand("rand-board", "Seeded random board");
  rand_board->add_option("--height", height)->required();
  rand_board->add_option("--width", width)->required();
  rand_board->add_option("--colours", colours)->required();
  rand_board->add_option("--seed", seed)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const Json doc = read_input(input);
      const flood::ColouredGraph g = graph_of(doc);
      flood::oracle::SolveResult result;
      if (variant == "fixed") {
        if (target) throw flood::InvalidArgument("--target applies to the free variant only");
        result = flood::oracle::solve_fixed_exact(g, pivot.value_or(0), budget);
      } else {
        if (pivot) throw flood::InvalidArgument("--pivot applies to the fixed variant only");
        result = flood::oracle::solve_free_exact(g, colour_option(target, g.colour_count()), budget);
      }
      Json out = {{"optimum", result.optimum}, {"witness", moves_to_json(result.witness)}};
      if (result.target_colour) out["colour"] = flood::io::to_label(*result.target_colour);
      print(out);
    } else if (link->parsed()) {
      const flood::ColouredGraph g = graph_of(read_input(input));
      if (all_pairs) {
        Json pairs = Json::array();
        auto emit = [&](auto&& cost) {
          for (flood::VertexId a = 0; a < g.vertex_count(); ++a)
            for (flood::VertexId b = 0; b < g.vertex_count(); ++b)
              for (int d = 0; d < g.colour_count(); ++d)
                pairs.push_back({{"u", a}, {"v", b}, {"d", d + 1}, {"m", cost(a, b, flood::ColourId{d})}});
        };
        if (exact) {
          const auto costs = flood::oracle::link_exact_all(g, budget);
          emit([&](auto a, auto b, auto d) { return costs.at(a, b, d); });
        } else {
          const auto table = flood::compute_table(g);
          emit([&](auto a, auto b, auto d) { return table.at(a, b, d); });
        }
        print({{"pairs", pairs}});
      } else {
        if (!u || !v) throw flood::InvalidArgument("--u and --v are required without --all");
        const auto d = colour_option(colour, g.colour_count());
        int cost = 0;
        flood::ColourId witness_colour{0};
        if (exact && d) {
          cost = flood::oracle::link_exact(g, *u, *v, d, budget).optimum;
          witness_colour = *d;
        } else if (exact) {
          // Smallest colour on ties, as for the table.
          cost = -1;
          for (int c = 0; c < g.colour_count(); ++c) {
            const int m = flood::oracle::link_exact(g, *u, *v, flood::ColourId{c}, budget).optimum;
            if (cost < 0 || m < cost) std::tie(cost, witness_colour) = std::pair(m, flood::ColourId{c});
          }
        } else {
          const auto table = flood::compute_table(g);
          if (d) {
            cost = flood::query_link(table, *u, *v, *d);
            witness_colour = *d;
          } else {
            std::tie(cost, witness_colour) = flood::query_link_any(table, *u, *v);
          }
        }
        print({{"u", *u}, {"v", *v}, {"d", flood::io::to_label(witness_colour)}, {"m", cost}});
      }
    } else if (approx->parsed()) {
      const auto result = flood::approx_board(flood::io::board_from_json(read_input(input)));
      print({{"lower", result.lower}, {"upper", result.upper}, {"witness", moves_to_json(result.witness)}});
    } else if (reduce->parsed() || verify->parsed()) {
      const Json doc = read_input(input);
      flood::reduction::ScsInstance instance;
      instance.strings = doc.at("strings").get<std::vector<std::string>>();
      instance.l = doc.at("l").get<int>();
      const auto kind = flood::reduction::variant_from_string(doc.value("variant", std::string("fixed")));
      if (reduce->parsed()) {
        instance.validate();
        const auto built = kind == flood::reduction::Variant::fixed ? flood::reduction::build_fixed_board(instance)
                                                                    : flood::reduction::build_free_board(instance);
        Json spans = Json::array();
        for (const auto& s : built.gadget_spans)
          spans.push_back({{"name", s.name}, {"first_col", s.first_col}, {"last_col", s.last_col}});
        Json out = flood::io::board_to_json(built.board);
        out["gadget_spans"] = spans;
        out["threshold"] = built.claimed_threshold;
        out["external_cell"] = built.external_cell;
        print(out);
      } else {
        flood::reduction::VerifyOptions options;
        options.max_cells = max_cells;
        if (verify->count("--budget") > 0) options.budget = budget;
        const auto report = flood::reduction::verify_reduction(instance, kind, options);
        Json claims = Json::array();
        for (const auto& c : report.claims)
          claims.push_back({{"name", c.name}, {"status", flood::reduction::to_string(c.status)}, {"detail", c.detail}});
        Json out = {{"variant", flood::reduction::to_string(report.variant)},
                    {"scs", {{"length", report.scs.length}, {"witness", report.scs.witness}}},
                    {"width", report.board.board.width()},
                    {"threshold", report.board.claimed_threshold},
                    {"fixed_optimum", nullptr},
                    {"optimum_exceeds_budget", report.optimum_exceeds_budget},
                    {"crossing_regions", nullptr},
                    {"partial", report.partial},
                    {"passed", report.passed()},
                    {"claims", claims}};
        if (report.fixed_optimum) out["fixed_optimum"] = *report.fixed_optimum;
        if (report.crossing_regions) out["crossing_regions"] = *report.crossing_regions;
        print(out);
        return report.passed() ? 0 : 1;
      }
    } else if (serve->parsed()) {
      flood::service::ServiceConfig config;
      config.data_dir = data_dir;
      flood::service::GameService service(config);
      std::optional<std::filesystem::path> assets;
      if (!static_dir.empty()) assets = static_dir;
      flood::service::HttpApi api(service, assets);
      const int bound = api.bind(host, port);
      std::cerr << "listening on http://" << host << ':' << bound << '\n';
      running_api = &api;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      api.listen();
      running_api = nullptr;
    } else if (rand_board->parsed()) {
      print(flood::io::board_to_json(flood::random::random_board(height, width, colours, seed)));
    }
  } catch (const flood::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
