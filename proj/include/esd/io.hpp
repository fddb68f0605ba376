#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "esd/game.hpp"
#include "esd/graph.hpp"
#include "esd/search.hpp"
#include "esd/verify.hpp"

namespace esd {

// Parse failure with a 1-based source position when one is known.
class ParseError : public GraphError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : GraphError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// {"n": <int>, "edges": [[u, v], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// {"l": <int>, "labels": {"<vertex>": <label>, ...}}
nlohmann::json labeling_to_json(const Labeling& phi);
Labeling labeling_from_json(const nlohmann::json& j, int order);

// Graphviz text; with a labeling, vertices read v<i> [label="<i>:<phi(i)>"]
// and fully labeled edges carry weight=<w>.
std::string to_dot(const Graph& g, const Labeling* phi = nullptr);
// Reads the undirected subset of DOT that to_dot emits: vN node statements
// and "vA -- vB" edges. The order is the largest vertex id mentioned.
Graph graph_from_dot(std::string_view text);

// JSON when the first non-blank character is '{', DOT otherwise. Throws
// ParseError carrying the line and column of the problem.
Graph parse_graph_text(std::string_view text);
nlohmann::json parse_json_text(std::string_view text);

nlohmann::json conflict_to_json(const Conflict& c);
nlohmann::json verify_to_json(const VerifyResult& r);
nlohmann::json outcome_to_json(const SearchOutcome& out);
nlohmann::json move_to_json(const Move& m);
Move move_from_json(const nlohmann::json& j);
nlohmann::json rejection_to_json(const MoveRejection& r);

}  // namespace esd
