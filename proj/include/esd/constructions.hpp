#pragma once

#include <string>
#include <variant>

#include "esd/families.hpp"
#include "esd/graph.hpp"

namespace esd {

struct ConstructionResult {
  Graph graph;
  Labeling labeling;
  // True iff pool_size equals the order of the graph.
  bool canonical = false;
  // Largest label the labeling uses; the labeling draws from {1..pool_size}.
  Label pool_size = 0;
};

// The requested graph provably has no canonical ESD labeling.
struct NoneExists {
  std::string reason;
};

using ConstructionOutcome = std::variant<ConstructionResult, NoneExists>;

// Every function below verifies its output before returning and throws
// std::logic_error if verification fails.

// BFS order from root, neighbours visited in ascending order; the k-th visited
// vertex gets label k. Throws std::invalid_argument if g is not a tree.
ConstructionResult label_tree_bfs(const Graph& g, Vertex root = 1);

// Odd n: identity. Even n: identity except the last two labels swapped.
ConstructionResult label_cycle(int n);

// p >= 3: NoneExists. p == 2: 1 and n on the small part, 2..n-1 on the other.
// p == 1: identity. Requires 1 <= p <= q.
ConstructionOutcome label_complete_bipartite(int p, int q);

// Weight set is exactly {3, ..., 2n-1}.
ConstructionResult label_tight_extremal(int n);

// n <= 7: stored labeling found by exhaustive search. n >= 8: NoneExists.
ConstructionOutcome label_fan(int n);

// Row-major identity on the grid with an even number of columns; when only
// the row count is even the labeling runs column-major instead. Throws
// UnsupportedConstruction when both k and l are odd.
ConstructionResult label_grid(int k, int l);

// k odd and p even: identity (canonical). Otherwise the cycle is labeled as
// label_cycle(k) and the remaining vertices greedily from 2k-1 upward, each
// new label going to the lowest-numbered free neighbour of the labeled vertex
// with the smallest label that still has a free neighbour.
ConstructionResult label_sunlet(int k, int p);

// Vertex i gets the Fibonacci number F_{i+1} (F_1 = F_2 = 1), so K_n is
// labeled from a pool of F_{n+1}. Throws std::overflow_error when the largest
// edge-weight would not fit in a Label (n > 90).
ConstructionResult label_complete_fibonacci(int n);

// Dispatches on the family. Tree families are labeled from vertex 1; complete
// graphs get the Fibonacci labeling.
ConstructionOutcome construct(const GraphFamily& family);

}  // namespace esd
