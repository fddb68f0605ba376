#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "esd/graph.hpp"

namespace esd {

enum class ConflictKind { DuplicateLabel, WeightClash };

struct Conflict {
  ConflictKind kind = ConflictKind::WeightClash;
  // DuplicateLabel: the two vertices sharing `value`.
  std::pair<Vertex, Vertex> vertices{};
  // WeightClash: the earlier and the later edge (lexicographic) sharing `value`.
  Edge first{};
  Edge second{};
  // The shared label or the shared weight.
  Label value = 0;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct VerifyResult {
  bool esd = true;
  std::optional<Conflict> conflict;

  explicit operator bool() const { return esd; }
};

// True iff phi is injective on assigned vertices and every edge with both
// endpoints assigned has a distinct weight. The first conflict found (scanning
// vertices, then edges, in ascending order) is returned.
//
// Throws InvalidLabeling if phi's order differs from g's, if a label lies
// outside phi's pool, or if require_total is set and a vertex is unassigned.
VerifyResult verify_esd(const Graph& g, const Labeling& phi, bool require_total = false);

// False when |E| > 2n - 3, in which case no canonical ESD labeling exists.
// True only means the edge-count bound does not exclude one.
bool canonical_feasible(const Graph& g);

struct WeightedEdge {
  Edge edge;
  Label weight = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Weights of edges whose endpoints are both assigned, in edge order.
std::vector<WeightedEdge> edge_weights(const Graph& g, const Labeling& phi);

}  // namespace esd
