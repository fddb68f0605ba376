#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "esd/graph.hpp"

namespace esd {

struct AutomorphismOptions {
  // Largest order handled by brute-force enumeration. Complete bipartite
  // graphs are enumerated in closed form at any order.
  int max_order = 10;
};

struct BipartiteParts {
  std::vector<Vertex> small;
  std::vector<Vertex> large;
};

// The two parts of g if g is K_{p,q} with p, q >= 1 (small part first).
std::optional<BipartiteParts> complete_bipartite_parts(const Graph& g);

// A permutation f given as image[v] = f(v) for v in 1..n; image[0] is unused.
using Permutation = std::span<const Vertex>;

// Calls visit for every automorphism of g; stops early when visit returns
// false. Throws UnsupportedSize above options.max_order unless g is complete
// bipartite.
void for_each_automorphism(const Graph& g, const std::function<bool(Permutation)>& visit,
                           const AutomorphismOptions& options = {});

std::size_t count_automorphisms(const Graph& g, const AutomorphismOptions& options = {});

// True iff some automorphism f of g satisfies a(v) = b(f(v)) for all v.
// Both labelings must be total and injective (InvalidLabeling otherwise).
// Injectivity pins f down to b^{-1} o a, so this runs in O(|E| log) at any
// order and does not enumerate the automorphism group.
bool labelings_isomorphic(const Graph& g, const Labeling& a, const Labeling& b);

}  // namespace esd
