#include "esd/verify.hpp"

#include <string>
#include <unordered_map>

namespace esd {

VerifyResult verify_esd(const Graph& g, const Labeling& phi, bool require_total) {
  if (phi.order() != g.order()) {
    throw InvalidLabeling("labeling covers " + std::to_string(phi.order()) + " vertices, graph has " +
                          std::to_string(g.order()));
  }
  std::unordered_map<Label, Vertex> holder;
  holder.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) {
    const Label a = phi[v];
    if (a == 0) {
      if (require_total) throw InvalidLabeling("vertex " + std::to_string(v) + " is unlabeled");
      continue;
    }
    if (a < 1 || a > phi.pool()) throw InvalidLabeling("label " + std::to_string(a) + " outside pool");
    auto [it, fresh] = holder.emplace(a, v);
    if (!fresh) {
      Conflict c;
      c.kind = ConflictKind::DuplicateLabel;
      c.vertices = {it->second, v};
      c.value = a;
      return {false, c};
    }
  }

  std::unordered_map<Label, Edge> seen;
  seen.reserve(g.size());
  for (const Edge& e : g.edges()) {
    if (phi[e.u] == 0 || phi[e.v] == 0) continue;
    const Label w = phi[e.u] + phi[e.v];
    auto [it, fresh] = seen.emplace(w, e);
    if (!fresh) {
      Conflict c;
      c.kind = ConflictKind::WeightClash;
      c.first = it->second;
      c.second = e;
      c.value = w;
      return {false, c};
    }
  }
  return {true, std::nullopt};
}

bool canonical_feasible(const Graph& g) {
  if (g.order() < 2) return true;
  return g.size() <= static_cast<std::size_t>(2 * g.order() - 3);
}

std::vector<WeightedEdge> edge_weights(const Graph& g, const Labeling& phi) {
  std::vector<WeightedEdge> out;
  for (const Edge& e : g.edges()) {
    if (phi[e.u] != 0 && phi[e.v] != 0) out.push_back({e, phi[e.u] + phi[e.v]});
  }
  return out;
}

}  // namespace esd
