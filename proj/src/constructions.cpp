#include "esd/constructions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

#include "esd/verify.hpp"

namespace esd {
namespace {

ConstructionResult finish(Graph g, std::vector<Label> values) {
  const Label pool = values.empty() ? 0 : *std::max_element(values.begin(), values.end());
  Labeling phi = Labeling::from_values(pool, values);
  if (!phi.is_total() || !verify_esd(g, phi, true)) {
    throw std::logic_error("construction produced a labeling that is not ESD");
  }
  const bool canonical = pool == g.order();
  return ConstructionResult{std::move(g), std::move(phi), canonical, pool};
}

std::vector<Label> identity(int n) {
  std::vector<Label> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[i] = i + 1;
  return values;
}

std::vector<Label> cycle_values(int n) {
  auto values = identity(n);
  if (n % 2 == 0) std::swap(values[n - 2], values[n - 1]);
  return values;
}

// Canonical fan labelings (centre first, then the path in order), found by
// exhaustive search and checked against it in the test suite.
constexpr std::array<std::array<Label, 7>, 8> kFanLabelings{{
    {},
    {},
    {1, 2},
    {1, 2, 3},
    {1, 2, 4, 3},
    {2, 1, 3, 5, 4},
    {3, 2, 1, 5, 6, 4},
    {4, 3, 1, 2, 6, 7, 5},
}};

}  // namespace

ConstructionResult label_tree_bfs(const Graph& g, Vertex root) {
  if (!g.is_tree()) throw std::invalid_argument("graph is not a tree");
  if (root < 1 || root > g.order()) throw std::invalid_argument("root outside the vertex range");
  std::vector<Label> values(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue{root};
  values[root - 1] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbors(queue[head])) {
      if (values[w - 1] == 0) {
        queue.push_back(w);
        values[w - 1] = static_cast<Label>(queue.size());
      }
    }
  }
  return finish(g, std::move(values));
}

ConstructionResult label_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  return finish(cycle_graph(n), cycle_values(n));
}

ConstructionOutcome label_complete_bipartite(int p, int q) {
  if (p < 1 || p > q) throw std::invalid_argument("complete bipartite labeling needs 1 <= p <= q");
  if (p >= 3) {
    return NoneExists{"K_{" + std::to_string(p) + "," + std::to_string(q) +
                      "} has no canonical ESD labeling when both parts exceed 2"};
  }
  const int n = p + q;
  if (p == 1) return finish(complete_bipartite_graph(p, q), identity(n));
  std::vector<Label> values(static_cast<std::size_t>(n));
  values[0] = 1;
  values[1] = n;
  for (int i = 1; i <= q; ++i) values[1 + i] = i + 1;
  return finish(complete_bipartite_graph(p, q), std::move(values));
}

ConstructionResult label_tight_extremal(int n) {
  if (n < 2) throw std::invalid_argument("tight extremal graph needs n >= 2");
  if (n <= 3) return finish(tight_extremal_graph(n), identity(n));
  std::vector<Label> values(static_cast<std::size_t>(n));
  values[0] = 1;
  values[1] = n;
  for (int i = 1; i <= n - 2; ++i) values[1 + i] = i + 1;
  return finish(tight_extremal_graph(n), std::move(values));
}

ConstructionOutcome label_fan(int n) {
  if (n < 2) throw std::invalid_argument("fan needs n >= 2");
  if (n >= 8) return NoneExists{"fan F_" + std::to_string(n) + " has no canonical ESD labeling for n >= 8"};
  const auto& stored = kFanLabelings[static_cast<std::size_t>(n)];
  return finish(fan_graph(n), std::vector<Label>(stored.begin(), stored.begin() + n));
}

ConstructionResult label_grid(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("grid needs k, l >= 1");
  if (k % 2 != 0 && l % 2 != 0) {
    throw UnsupportedConstruction("grid " + std::to_string(k) + "x" + std::to_string(l) +
                                  " has no closed-form labeling when both sides are odd");
  }
  std::vector<Label> values(static_cast<std::size_t>(k) * l);
  for (int row = 0; row < l; ++row) {
    for (int col = 0; col < k; ++col) {
      // Transposed when the column count is odd so that the even side is the
      // row length.
      const Label label = k % 2 == 0 ? row * k + col + 1 : col * l + row + 1;
      values[static_cast<std::size_t>(row) * k + col] = label;
    }
  }
  return finish(grid_graph(k, l), std::move(values));
}

ConstructionResult label_sunlet(int k, int p) {
  if (k < 3 || p < 1) throw std::invalid_argument("sunlet needs k >= 3 and p >= 1");
  Graph g = sunlet_graph(k, p);
  const int n = g.order();
  if (k % 2 == 1 && p % 2 == 0) return finish(std::move(g), identity(n));

  std::vector<Label> values(static_cast<std::size_t>(n), 0);
  const auto cycle = cycle_values(k);
  for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i) * p] = cycle[i];

  auto free_neighbour = [&](Vertex v) -> Vertex {
    for (Vertex w : g.neighbors(v))
      if (values[w - 1] == 0) return w;
    return 0;
  };
  Label next = 2 * static_cast<Label>(k) - 1;
  for (int remaining = n - k; remaining > 0; --remaining) {
    Vertex anchor = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (values[v - 1] == 0 || free_neighbour(v) == 0) continue;
      if (anchor == 0 || values[v - 1] < values[anchor - 1]) anchor = v;
    }
    if (anchor == 0) throw std::logic_error("sunlet greedy labeling ran out of anchors");
    values[free_neighbour(anchor) - 1] = next++;
  }
  return finish(std::move(g), std::move(values));
}

ConstructionResult label_complete_fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  // fib[i] = F_i; the largest weight is F_{n+1} + F_n = F_{n+2}.
  std::vector<Label> fib{0, 1};
  for (int i = 2; i <= n + 2; ++i) {
    if (fib[i - 1] > std::numeric_limits<Label>::max() - fib[i - 2]) {
      throw std::overflow_error("Fibonacci labeling of K_" + std::to_string(n) + " overflows 64-bit labels");
    }
    fib.push_back(fib[i - 1] + fib[i - 2]);
  }
  std::vector<Label> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) values[i - 1] = fib[i + 1];
  return finish(complete_graph(n), std::move(values));
}

ConstructionOutcome construct(const GraphFamily& f) {
  switch (f.kind) {
    case FamilyKind::Path:
    case FamilyKind::Star:
    case FamilyKind::Tree: return label_tree_bfs(build_graph(f), 1);
    case FamilyKind::Cycle: return label_cycle(f.first);
    case FamilyKind::CompleteBipartite:
      return label_complete_bipartite(std::min(f.first, f.second), std::max(f.first, f.second));
    case FamilyKind::TightExtremal: return label_tight_extremal(f.first);
    case FamilyKind::Fan: return label_fan(f.first);
    case FamilyKind::Grid: return label_grid(f.first, f.second);
    case FamilyKind::Sunlet: return label_sunlet(f.first, f.second);
    case FamilyKind::Complete: return label_complete_fibonacci(f.first);
  }
  throw std::invalid_argument("unknown family kind");
}

}  // namespace esd
