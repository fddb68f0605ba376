#include "esd/graph.hpp"

#include <algorithm>
#include <string>

namespace esd {

Graph::Graph(int order) : Graph(order, {}) {}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
  if (order < 0) throw GraphError("negative vertex count");
  for (Edge& e : edges) {
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    e = Edge::of(e.u, e.v);
    if (e.u < 1 || e.v > order) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint outside 1.." + std::to_string(order));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);
  adjacency_.assign(order_ + 1, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 1; v <= order_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

bool Graph::is_connected() const {
  if (order_ <= 1) return true;
  std::vector<char> seen(order_ + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order_;
}

Labeling::Labeling(int order, Label pool) : pool_(pool), values_(order + 1, 0) {
  if (order < 0) throw InvalidLabeling("negative vertex count");
  if (pool < 0) throw InvalidLabeling("negative label pool");
}

Labeling Labeling::from_values(Label pool, std::span<const Label> values) {
  Labeling phi(static_cast<int>(values.size()), pool);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) phi.assign(static_cast<Vertex>(i + 1), values[i]);
  }
  return phi;
}

std::optional<Label> Labeling::get(Vertex v) const {
  const Label value = values_.at(v);
  if (value == 0) return std::nullopt;
  return value;
}

void Labeling::assign(Vertex v, Label label) {
  if (v < 1 || v > order()) throw InvalidLabeling("vertex " + std::to_string(v) + " out of range");
  if (label < 1 || label > pool_) {
    throw InvalidLabeling("label " + std::to_string(label) + " outside pool 1.." + std::to_string(pool_));
  }
  values_[v] = label;
}

void Labeling::clear(Vertex v) {
  if (v < 1 || v > order()) throw InvalidLabeling("vertex " + std::to_string(v) + " out of range");
  values_[v] = 0;
}

int Labeling::assigned_count() const {
  return static_cast<int>(std::count_if(values_.begin() + 1, values_.end(), [](Label x) { return x != 0; }));
}

}  // namespace esd
