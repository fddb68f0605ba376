#include "esd/io.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <sstream>

namespace esd {
namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

int as_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw GraphError(where + " must be an integer");
  return j.get<int>();
}

}  // namespace

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw GraphError("graph must be a JSON object");
  if (!j.contains("n")) throw GraphError("graph is missing \"n\"");
  const int n = as_int(j.at("n"), "\"n\"");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const auto& list = j.at("edges");
    if (!list.is_array()) throw GraphError("\"edges\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& pair = list[i];
      const std::string where = "edges[" + std::to_string(i) + "]";
      if (!pair.is_array() || pair.size() != 2) throw GraphError(where + " must be a pair [u, v]");
      edges.push_back({as_int(pair[0], where), as_int(pair[1], where)});
    }
  }
  return Graph(n, std::move(edges));
}

nlohmann::json labeling_to_json(const Labeling& phi) {
  nlohmann::json labels = nlohmann::json::object();
  for (Vertex v = 1; v <= phi.order(); ++v) {
    if (phi.assigned(v)) labels[std::to_string(v)] = phi[v];
  }
  return {{"l", phi.pool()}, {"labels", std::move(labels)}};
}

Labeling labeling_from_json(const nlohmann::json& j, int order) {
  if (!j.is_object() || !j.contains("l") || !j.contains("labels")) {
    throw InvalidLabeling("labeling must be an object with \"l\" and \"labels\"");
  }
  if (!j.at("l").is_number_integer()) throw InvalidLabeling("\"l\" must be an integer");
  const auto& labels = j.at("labels");
  if (!labels.is_object()) throw InvalidLabeling("\"labels\" must be an object keyed by vertex");
  Labeling phi(order, j.at("l").get<Label>());
  for (const auto& [key, value] : labels.items()) {
    Vertex v = 0;
    const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc{} || end != key.data() + key.size()) {
      throw InvalidLabeling("vertex key '" + key + "' is not an integer");
    }
    if (!value.is_number_integer()) throw InvalidLabeling("label of vertex " + key + " must be an integer");
    phi.assign(v, value.get<Label>());
  }
  return phi;
}

std::string to_dot(const Graph& g, const Labeling* phi) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    out << "  v" << v << " [label=\"" << v;
    if (phi && phi->assigned(v)) out << ":" << (*phi)[v];
    out << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  v" << e.u << " -- v" << e.v;
    if (phi && phi->assigned(e.u) && phi->assigned(e.v)) out << " [weight=" << (*phi)[e.u] + (*phi)[e.v] << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Graph graph_from_dot(std::string_view text) {
  static const std::regex header(R"(^\s*(strict\s+)?graph\b[^{]*\{)");
  static const std::regex edge(R"(^\s*v(\d+)\s*--\s*v(\d+)\s*(\[[^\]]*\])?\s*$)");
  static const std::regex node(R"(^\s*v(\d+)\s*(\[[^\]]*\])?\s*$)");
  static const std::regex blank(R"(^\s*(//.*)?$)");

  const std::string source(text);
  std::smatch m;
  if (!std::regex_search(source, m, header)) throw ParseError("expected 'graph {' header", 1, 1);
  std::size_t pos = static_cast<std::size_t>(m.position(0) + m.length(0));

  std::vector<Edge> edges;
  int order = 0;
  bool closed = false;
  // Statements end at ';', a newline or the closing brace; quoted strings and
  // attribute lists may contain any of those.
  while (pos < source.size() && !closed) {
    const std::size_t start = pos;
    bool quoted = false;
    int brackets = 0;
    for (; pos < source.size(); ++pos) {
      const char ch = source[pos];
      if (quoted) {
        if (ch == '\\') ++pos;
        else if (ch == '"') quoted = false;
      } else if (ch == '"') {
        quoted = true;
      } else if (ch == '[') {
        ++brackets;
      } else if (ch == ']') {
        --brackets;
      } else if (brackets == 0 && (ch == ';' || ch == '\n' || ch == '}')) {
        break;
      }
    }
    const std::string statement = source.substr(start, pos - start);
    const auto [line, column] = line_column(text, start);
    if (pos < source.size() && source[pos] == '}') closed = true;
    ++pos;
    if (std::regex_match(statement, m, edge)) {
      const int u = std::stoi(m[1]);
      const int v = std::stoi(m[2]);
      edges.push_back({u, v});
      order = std::max({order, u, v});
    } else if (std::regex_match(statement, m, node)) {
      order = std::max(order, std::stoi(m[1]));
    } else if (!std::regex_match(statement, blank)) {
      throw ParseError("unsupported DOT statement: " + statement, line, column);
    }
  }
  if (!closed) throw ParseError("missing closing '}'", line_column(text, source.size()).first, 1);
  return Graph(order, std::move(edges));
}

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(text, offset);
    throw ParseError(e.what(), line, column);
  }
}

Graph parse_graph_text(std::string_view text) {
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return graph_from_json(parse_json_text(text));
  return graph_from_dot(text);
}

nlohmann::json conflict_to_json(const Conflict& c) {
  if (c.kind == ConflictKind::DuplicateLabel) {
    return {{"kind", "duplicateLabel"}, {"vertices", {c.vertices.first, c.vertices.second}}, {"label", c.value}};
  }
  return {{"kind", "weightClash"},
          {"edges", {{c.first.u, c.first.v}, {c.second.u, c.second.v}}},
          {"weight", c.value}};
}

nlohmann::json verify_to_json(const VerifyResult& r) {
  nlohmann::json j{{"esd", r.esd}};
  if (r.conflict) j["conflict"] = conflict_to_json(*r.conflict);
  return j;
}

nlohmann::json outcome_to_json(const SearchOutcome& out) {
  nlohmann::json labelings = nlohmann::json::array();
  for (const Labeling& phi : out.labelings) labelings.push_back(labeling_to_json(phi));
  return {{"status", to_string(out.status)},
          {"labelings", std::move(labelings)},
          {"count", out.solutions},
          {"nodes", out.nodes_visited},
          {"note", out.certificate_note}};
}

nlohmann::json move_to_json(const Move& m) { return {{"v", m.vertex}, {"label", m.label}}; }

Move move_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("v") || !j.contains("label") || !j.at("v").is_number_integer() ||
      !j.at("label").is_number_integer()) {
    throw std::invalid_argument("move must be {\"v\": <int>, \"label\": <int>}");
  }
  return {j.at("v").get<Vertex>(), j.at("label").get<Label>()};
}

nlohmann::json rejection_to_json(const MoveRejection& r) {
  nlohmann::json j{{"reason", r.message()}};
  if (r.reason == RejectReason::WeightClash) {
    j["edges"] = {{r.new_edge.u, r.new_edge.v}, {r.existing_edge.u, r.existing_edge.v}};
    j["weight"] = r.weight;
  }
  return j;
}

}  // namespace esd
