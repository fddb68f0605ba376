#include "esd/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace esd {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("bad number '" + std::string(text) + "' in family spec '" + std::string(spec) + "'");
  }
  if (value < 1) throw std::invalid_argument("parameters must be positive in family spec '" + std::string(spec) + "'");
  return value;
}

std::vector<int> parse_ints(std::string_view text, std::string_view separators, std::string_view spec) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t stop = text.find_first_of(separators, start);
    out.push_back(parse_int(text.substr(start, stop - start), spec));
    if (stop == std::string_view::npos) break;
    start = stop + 1;
  }
  return out;
}

constexpr std::string_view kGrammar =
    "expected <family>:<params>, one of path:N star:LEAVES tree:N[,SEED] cycle:N kpq:P,Q tight:N fan:N "
    "grid:KxL sunlet:K,P complete:N";

}  // namespace

GraphFamily parse_family(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument(std::string(kGrammar));
  const std::string_view name = spec.substr(0, colon);
  const std::string_view params = spec.substr(colon + 1);
  GraphFamily f;
  auto one = [&](FamilyKind kind) {
    f.kind = kind;
    f.first = parse_int(params, spec);
  };
  auto two = [&](FamilyKind kind, std::string_view sep) {
    const auto values = parse_ints(params, sep, spec);
    if (values.size() != 2) throw std::invalid_argument("family '" + std::string(name) + "' takes two parameters");
    f.kind = kind;
    f.first = values[0];
    f.second = values[1];
  };
  if (name == "path") {
    one(FamilyKind::Path);
  } else if (name == "star") {
    one(FamilyKind::Star);
  } else if (name == "tree") {
    const std::size_t comma = params.find(',');
    f.kind = FamilyKind::Tree;
    f.first = parse_int(params.substr(0, comma), spec);
    if (comma != std::string_view::npos) {
      const std::string_view seed = params.substr(comma + 1);
      const auto [end, ec] = std::from_chars(seed.data(), seed.data() + seed.size(), f.seed);
      if (ec != std::errc{} || end != seed.data() + seed.size()) throw std::invalid_argument("tree takes N[,SEED]");
    }
  } else if (name == "cycle") {
    one(FamilyKind::Cycle);
  } else if (name == "kpq") {
    two(FamilyKind::CompleteBipartite, ",");
  } else if (name == "tight") {
    one(FamilyKind::TightExtremal);
  } else if (name == "fan") {
    one(FamilyKind::Fan);
  } else if (name == "grid") {
    two(FamilyKind::Grid, "x");
  } else if (name == "sunlet") {
    two(FamilyKind::Sunlet, ",");
  } else if (name == "complete") {
    one(FamilyKind::Complete);
  } else {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'; " + std::string(kGrammar));
  }
  return f;
}

std::string to_string(const GraphFamily& f) {
  const std::string a = std::to_string(f.first);
  const std::string b = std::to_string(f.second);
  switch (f.kind) {
    case FamilyKind::Path: return "path:" + a;
    case FamilyKind::Star: return "star:" + a;
    case FamilyKind::Tree: return "tree:" + a + "," + std::to_string(f.seed);
    case FamilyKind::Cycle: return "cycle:" + a;
    case FamilyKind::CompleteBipartite: return "kpq:" + a + "," + b;
    case FamilyKind::TightExtremal: return "tight:" + a;
    case FamilyKind::Fan: return "fan:" + a;
    case FamilyKind::Grid: return "grid:" + a + "x" + b;
    case FamilyKind::Sunlet: return "sunlet:" + a + "," + b;
    case FamilyKind::Complete: return "complete:" + a;
  }
  return {};
}

Graph build_graph(const GraphFamily& f) {
  switch (f.kind) {
    case FamilyKind::Path: return path_graph(f.first);
    case FamilyKind::Star: return star_graph(f.first);
    case FamilyKind::Tree: {
      std::mt19937_64 rng(f.seed);
      return random_tree(f.first, rng);
    }
    case FamilyKind::Cycle: return cycle_graph(f.first);
    case FamilyKind::CompleteBipartite: return complete_bipartite_graph(f.first, f.second);
    case FamilyKind::TightExtremal: return tight_extremal_graph(f.first);
    case FamilyKind::Fan: return fan_graph(f.first);
    case FamilyKind::Grid: return grid_graph(f.first, f.second);
    case FamilyKind::Sunlet: return sunlet_graph(f.first, f.second);
    case FamilyKind::Complete: return complete_graph(f.first);
  }
  throw std::invalid_argument("unknown family kind");
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  require(leaves >= 1, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= leaves + 1; ++v) edges.push_back({1, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int p, int q) {
  require(p >= 1 && q >= 1, "complete bipartite graph needs p, q >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= p; ++u)
    for (Vertex v = p + 1; v <= p + q; ++v) edges.push_back({u, v});
  return Graph(p + q, std::move(edges));
}

Graph tight_extremal_graph(int n) {
  require(n >= 2, "tight extremal graph needs n >= 2");
  if (n <= 3) return complete_graph(n);
  std::vector<Edge> edges{{1, 2}};
  for (Vertex y = 3; y <= n; ++y) {
    edges.push_back({1, y});
    edges.push_back({2, y});
  }
  return Graph(n, std::move(edges));
}

Graph fan_graph(int n) {
  require(n >= 2, "fan needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= n; ++v) edges.push_back({1, v});
  for (Vertex v = 2; v < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph grid_graph(int k, int l) {
  require(k >= 1 && l >= 1, "grid needs k, l >= 1");
  auto id = [k](int row, int col) { return row * k + col + 1; };
  std::vector<Edge> edges;
  for (int row = 0; row < l; ++row) {
    for (int col = 0; col < k; ++col) {
      if (col + 1 < k) edges.push_back({id(row, col), id(row, col + 1)});
      if (row + 1 < l) edges.push_back({id(row, col), id(row + 1, col)});
    }
  }
  return Graph(k * l, std::move(edges));
}

Graph sunlet_graph(int k, int p) {
  require(k >= 3 && p >= 1, "sunlet needs k >= 3 and p >= 1");
  auto hub = [p](int i) { return i * p + 1; };
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back(Edge::of(hub(i), hub((i + 1) % k)));
    for (int j = 0; j + 1 < p; ++j) edges.push_back({hub(i) + j, hub(i) + j + 1});
  }
  return Graph(k * p, std::move(edges));
}

Graph random_tree(int n, std::mt19937_64& rng) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{1, 2}});
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n + 1, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back(Edge::of(leaf, c));
    if (--degree[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.push_back(Edge::of(a, leaves.top()));
  return Graph(n, std::move(edges));
}

std::vector<Graph> connected_graphs(int n) {
  require(n >= 1 && n <= 7, "connected graph catalog supports 1 <= n <= 7");
  std::vector<Edge> slots;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) slots.push_back({u, v});
  const int m = static_cast<int>(slots.size());
  std::vector<int> slot_of((n + 1) * (n + 1), 0);
  for (int i = 0; i < m; ++i) {
    slot_of[slots[i].u * (n + 1) + slots[i].v] = i;
    slot_of[slots[i].v * (n + 1) + slots[i].u] = i;
  }

  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto connected = [&](std::uint32_t mask) {
    std::uint32_t reached = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < m; ++i) {
        if (!(mask >> i & 1u)) continue;
        const std::uint32_t a = 1u << (slots[i].u - 1);
        const std::uint32_t b = 1u << (slots[i].v - 1);
        if (((reached & a) != 0) != ((reached & b) != 0)) {
          reached |= a | b;
          grew = true;
        }
      }
    }
    return reached == (1u << n) - 1;
  };

  // Keep a mask only if no vertex permutation maps it to a smaller mask.
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (!connected(mask)) continue;
    bool minimal = true;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1u) image |= 1u << slot_of[p[slots[i].u - 1] * (n + 1) + p[slots[i].v - 1]];
      }
      if (image < mask) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) edges.push_back(slots[i]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

}  // namespace esd
