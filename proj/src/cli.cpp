#include "esd/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "esd/constructions.hpp"
#include "esd/game.hpp"
#include "esd/io.hpp"
#include "esd/search.hpp"
#include "esd/verify.hpp"

namespace esd::cli {
namespace {

// Raised for input problems; carries the full diagnostic line.
struct UsageError {
  std::string message;
};

enum class Format { Json, Dot, Table };

struct Globals {
  Format format = Format::Json;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> node_limit;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError{"error: cannot open '" + path + "'"};
  buffer << file.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& path, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return parse_graph_text(text);
  } catch (const ParseError& e) {
    throw UsageError{"error: " + path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.what()};
  } catch (const GraphError& e) {
    throw UsageError{"error: " + path + ": " + e.what()};
  }
}

Labeling load_labeling(const std::string& path, int order, std::istream& in) {
  const std::string text = read_source(path, in);
  try {
    return labeling_from_json(parse_json_text(text), order);
  } catch (const ParseError& e) {
    throw UsageError{"error: " + path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                     e.what()};
  } catch (const InvalidLabeling& e) {
    throw UsageError{"error: " + path + ": " + e.what()};
  }
}

void print_labeling_table(std::ostream& out, const Graph& g, const Labeling& phi) {
  out << "vertex  label\n";
  for (Vertex v = 1; v <= phi.order(); ++v) {
    out << "v" << v << "\t" << (phi.assigned(v) ? std::to_string(phi[v]) : "-") << "\n";
  }
  out << "edge    weight\n";
  for (const WeightedEdge& we : edge_weights(g, phi)) {
    out << "v" << we.edge.u << "-v" << we.edge.v << "\t" << we.weight << "\n";
  }
}

void print_graph(std::ostream& out, const Graph& g, Format format) {
  switch (format) {
    case Format::Json: out << graph_to_json(g).dump() << "\n"; break;
    case Format::Dot: out << to_dot(g); break;
    case Format::Table:
      out << "n " << g.order() << "\n";
      for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
      break;
  }
}

SearchMode parse_mode(const std::string& mode) {
  if (mode == "first") return SearchMode::First;
  if (mode == "count") return SearchMode::Count;
  if (mode == "enum-iso") return SearchMode::EnumerateUpToIso;
  throw UsageError{"error: unknown search mode '" + mode + "'"};
}

int search_exit(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::ExhaustedNoneExists: return kNegative;
    case SearchStatus::Aborted: return kAborted;
  }
  return kAborted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Edge-sum distinguishing labelings: verify, construct, search and play", "esd"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"dot", Format::Dot}, {"table", Format::Table}}));
  app.add_option("--jobs", globals.jobs, "Worker threads for search")->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "Seed for randomised strategies");
  app.add_option("--node-limit", globals.node_limit, "Search node limit");

  // verify
  auto* verify = app.add_subcommand("verify", "Check whether a labeling is ESD");
  std::string verify_graph, verify_labels;
  bool partial = false;
  verify->add_option("graph", verify_graph, "Graph JSON or DOT ('-' for stdin)")->required();
  verify->add_option("labeling", verify_labels, "Labeling JSON")->required();
  verify->add_flag("--partial", partial, "Accept unlabeled vertices");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Closed-form ESD labeling for a graph family");
  std::string construct_family;
  construct_cmd->add_option("family", construct_family, "e.g. fan:8 grid:4x3 sunlet:5,2 kpq:2,7")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for ESD labelings");
  std::string search_graph, search_mode = "first", ordering = "constrained";
  Label search_labels = 0;
  std::optional<long> time_limit_ms;
  bool no_edge_bound = false;
  search_cmd->add_option("graph", search_graph, "Graph JSON or DOT ('-' for stdin)")->required();
  search_cmd->add_option("--labels", search_labels, "Label pool size l (default: n)");
  search_cmd->add_option("--mode", search_mode, "first|count|enum-iso");
  search_cmd->add_option("--ordering", ordering, "constrained|degree");
  search_cmd->add_option("--time-limit", time_limit_ms, "Time limit in milliseconds");
  search_cmd->add_flag("--no-edge-bound", no_edge_bound, "Skip the |E| <= 2l-3 pre-filter");

  // game
  auto* game = app.add_subcommand("game", "Maker-Breaker ESD labeling game");
  game->require_subcommand(1);
  auto* play = game->add_subcommand("play", "Play one game between two strategies");
  std::string play_graph, alice_name = "candidate", bob_name = "random";
  Label play_labels = 0;
  bool bob_starts = false;
  play->add_option("graph", play_graph)->required();
  play->add_option("--labels", play_labels, "Label pool size l (default: n)");
  play->add_option("--alice", alice_name, "candidate|random|greedy|optimal");
  play->add_option("--bob", bob_name, "candidate|random|greedy|optimal");
  play->add_flag("--bob-starts", bob_starts);
  auto* solve_cmd = game->add_subcommand("solve", "Winner under optimal play");
  std::string solve_graph;
  Label solve_labels = 0;
  GameSolveOptions guard;
  solve_cmd->add_option("graph", solve_graph)->required();
  solve_cmd->add_option("--labels", solve_labels, "Label pool size l (default: n)");
  solve_cmd->add_option("--max-order", guard.max_order, "Size guard on n");
  solve_cmd->add_option("--max-pool", guard.max_pool, "Size guard on l");
  auto* bound = game->add_subcommand("bound", "Label count sufficient for Alice's strategy");
  std::string bound_graph;
  bound->add_option("graph", bound_graph)->required();

  // gen / convert
  auto* gen = app.add_subcommand("gen", "Generate a graph from a family spec");
  std::string gen_family;
  gen->add_option("family", gen_family)->required();
  auto* convert = app.add_subcommand("convert", "Convert a graph between JSON and DOT");
  std::string convert_graph;
  convert->add_option("graph", convert_graph)->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      const Graph g = load_graph(verify_graph, in);
      const Labeling phi = load_labeling(verify_labels, g.order(), in);
      VerifyResult result;
      try {
        result = verify_esd(g, phi, !partial);
      } catch (const InvalidLabeling& e) {
        throw UsageError{std::string("error: ") + e.what()};
      }
      switch (globals.format) {
        case Format::Json: out << verify_to_json(result).dump() << "\n"; break;
        case Format::Dot: out << to_dot(g, &phi); break;
        case Format::Table:
          out << "esd " << (result.esd ? "yes" : "no") << "\n";
          if (result.conflict) out << "conflict " << conflict_to_json(*result.conflict).dump() << "\n";
          break;
      }
      return result.esd ? kOk : kNegative;
    }

    if (*construct_cmd) {
      GraphFamily family;
      try {
        family = parse_family(construct_family);
      } catch (const std::invalid_argument& e) {
        throw UsageError{std::string("error: ") + e.what()};
      }
      ConstructionOutcome outcome;
      try {
        outcome = construct(family);
      } catch (const UnsupportedConstruction& e) {
        out << nlohmann::json{{"family", to_string(family)}, {"status", "unsupported"}, {"reason", e.what()}}.dump()
            << "\n";
        return kNegative;
      }
      if (const auto* none = std::get_if<NoneExists>(&outcome)) {
        out << nlohmann::json{{"family", to_string(family)}, {"status", "noneExists"}, {"reason", none->reason}}
                   .dump()
            << "\n";
        return kNegative;
      }
      const auto& result = std::get<ConstructionResult>(outcome);
      switch (globals.format) {
        case Format::Json:
          out << nlohmann::json{{"family", to_string(family)},
                                {"graph", graph_to_json(result.graph)},
                                {"labeling", labeling_to_json(result.labeling)},
                                {"canonical", result.canonical},
                                {"labelPoolSize", result.pool_size}}
                     .dump()
              << "\n";
          break;
        case Format::Dot: out << to_dot(result.graph, &result.labeling); break;
        case Format::Table: print_labeling_table(out, result.graph, result.labeling); break;
      }
      return kOk;
    }

    if (*search_cmd) {
      const Graph g = load_graph(search_graph, in);
      SearchConfig cfg;
      cfg.pool = search_labels > 0 ? search_labels : g.order();
      cfg.mode = parse_mode(search_mode);
      if (ordering == "degree") {
        cfg.ordering = VertexOrdering::StaticDegree;
      } else if (ordering != "constrained") {
        throw UsageError{"error: unknown ordering '" + ordering + "'"};
      }
      if (globals.node_limit) cfg.node_limit = globals.node_limit;
      if (time_limit_ms) cfg.time_limit = std::chrono::milliseconds(*time_limit_ms);
      cfg.edge_bound_filter = !no_edge_bound;
      cfg.jobs = globals.jobs;
      const SearchOutcome outcome = solve(g, cfg);
      if (globals.format == Format::Table) {
        out << "status " << to_string(outcome.status) << "\nnodes " << outcome.nodes_visited << "\ncount "
            << outcome.solutions << "\n";
        for (const Labeling& phi : outcome.labelings) {
          for (Label a : phi.values()) out << a << " ";
          out << "\n";
        }
      } else if (globals.format == Format::Dot && !outcome.labelings.empty()) {
        out << to_dot(g, &outcome.labelings.front());
      } else {
        out << outcome_to_json(outcome).dump() << "\n";
      }
      return search_exit(outcome.status);
    }

    if (*play) {
      const Graph g = load_graph(play_graph, in);
      const Label pool = play_labels > 0 ? play_labels : g.order();
      Strategy alice{parse_strategy(alice_name), globals.seed};
      Strategy bob{parse_strategy(bob_name), globals.seed ? std::optional(*globals.seed + 1) : std::nullopt};
      const GameRecord record =
          play_game(g, pool, alice, bob, PlayOptions{bob_starts ? Player::Bob : Player::Alice});
      nlohmann::json moves = nlohmann::json::array();
      for (const Move& m : record.transcript) moves.push_back(move_to_json(m));
      if (globals.format == Format::Table) {
        Player mover = bob_starts ? Player::Bob : Player::Alice;
        for (const Move& m : record.transcript) {
          out << to_string(mover) << "\tv" << m.vertex << " <- " << m.label << "\n";
          mover = other(mover);
        }
        out << "winner " << to_string(record.winner) << "\n";
      } else {
        out << nlohmann::json{{"moves", std::move(moves)}, {"winner", to_string(record.winner)}}.dump() << "\n";
      }
      return kOk;
    }

    if (*solve_cmd) {
      const Graph g = load_graph(solve_graph, in);
      const Label pool = solve_labels > 0 ? solve_labels : g.order();
      GameSolution solution;
      try {
        solution = solve_game(g, pool, guard);
      } catch (const GameGuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kAborted;
      }
      out << nlohmann::json{{"winner", to_string(solution.winner)}, {"treeSize", solution.tree_size}}.dump() << "\n";
      return kOk;
    }

    if (*bound) {
      const Graph g = load_graph(bound_graph, in);
      out << nlohmann::json{{"bound", alice_bound(g)}, {"path", is_path_graph(g)}}.dump() << "\n";
      return kOk;
    }

    if (*gen) {
      GraphFamily family;
      try {
        family = parse_family(gen_family);
        print_graph(out, build_graph(family), globals.format);
      } catch (const std::invalid_argument& e) {
        throw UsageError{std::string("error: ") + e.what()};
      }
      return kOk;
    }

    if (*convert) {
      print_graph(out, load_graph(convert_graph, in), globals.format);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << e.message << "\n";
    return kUsage;
  } catch (const SearchAborted& e) {
    err << "error: " << e.what() << "\n";
    return kAborted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace esd::cli
