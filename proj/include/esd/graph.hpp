#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "esd/errors.hpp"

namespace esd {

// Vertices are 1-indexed: a graph of order n has vertices 1..n.
using Vertex = int;
using Label = std::int64_t;

// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Connectivity is not required.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  // Throws GraphError on self-loops, duplicate edges or endpoints outside
  // 1..order. Edge orientation is irrelevant.
  Graph(int order, std::vector<Edge> edges);

  int order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  // Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex a, Vertex b) const;

  bool is_connected() const;
  bool is_tree() const { return order_ >= 1 && is_connected() && size() + 1 == static_cast<std::size_t>(order_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_{1};
};

// Partial vertex labeling drawing from the pool {1..pool}. Injectivity is not
// enforced here so that verification can report duplicate labels.
class Labeling {
 public:
  Labeling() = default;
  Labeling(int order, Label pool);
  // values[i] is the label of vertex i+1; 0 marks an unassigned vertex.
  static Labeling from_values(Label pool, std::span<const Label> values);

  int order() const { return static_cast<int>(values_.size()) - 1; }
  Label pool() const { return pool_; }

  bool assigned(Vertex v) const { return values_.at(v) != 0; }
  std::optional<Label> get(Vertex v) const;
  // Label of an assigned vertex, 0 when unassigned.
  Label operator[](Vertex v) const { return values_[v]; }

  // Throws InvalidLabeling for a vertex outside 1..order or a label outside
  // the pool.
  void assign(Vertex v, Label label);
  void clear(Vertex v);

  int assigned_count() const;
  bool is_total() const { return assigned_count() == order(); }
  // Labels of vertices 1..order, 0 where unassigned.
  std::span<const Label> values() const { return std::span(values_).subspan(1); }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  Label pool_ = 0;
  std::vector<Label> values_{0};
};

}  // namespace esd
