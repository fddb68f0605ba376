#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "esd/graph.hpp"

namespace esd {

enum class FamilyKind { Path, Star, Tree, Cycle, CompleteBipartite, TightExtremal, Fan, Grid, Sunlet, Complete };

// A parameterised graph class. Meaning of the parameters per kind:
//   Path(n), Star(leaves), Tree(n, seed), Cycle(n), CompleteBipartite(p, q),
//   TightExtremal(n), Fan(n), Grid(columns k, rows l), Sunlet(k, p), Complete(n).
struct GraphFamily {
  FamilyKind kind = FamilyKind::Path;
  int first = 0;
  int second = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

// Parses "fan:8", "grid:4x3", "sunlet:5,2", "kpq:2,7", "complete:10",
// "tight:12", "cycle:9", "path:5", "star:4", "tree:30" or "tree:30,7".
// Throws std::invalid_argument with a description of the grammar on failure.
GraphFamily parse_family(std::string_view spec);
std::string to_string(const GraphFamily& family);

// Builds the graph with the vertex numbering the constructions rely on.
// Throws std::invalid_argument for parameters outside the family's domain.
Graph build_graph(const GraphFamily& family);

Graph path_graph(int n);
// Centre is vertex 1, leaves are 2..leaves+1.
Graph star_graph(int leaves);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// Part of size p is 1..p, part of size q is p+1..p+q.
Graph complete_bipartite_graph(int p, int q);
// K_{2,n-2} plus the edge inside the part of size 2 (vertices 1 and 2);
// K_2 and K_3 for n = 2, 3.
Graph tight_extremal_graph(int n);
// Centre is vertex 1, the path is 2..n.
Graph fan_graph(int n);
// k columns, l rows; row i holds vertices (i-1)k+1 .. ik.
Graph grid_graph(int k, int l);
// Cycle C_k with a path of order p hanging off each cycle vertex (the path's
// endpoint is the cycle vertex, so p-1 new vertices each). Block i (0-based)
// is vertices ip+1 .. (i+1)p: the cycle vertex ip+1 followed by its path.
Graph sunlet_graph(int k, int p);
// Uniform random labeled tree on n vertices via a Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

// Every connected graph on n vertices up to isomorphism, n <= 7.
std::vector<Graph> connected_graphs(int n);

}  // namespace esd
