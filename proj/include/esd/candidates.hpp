#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "esd/graph.hpp"
#include "esd/weights.hpp"

namespace esd {

// Set of labels drawn from {1..pool}.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(Label pool, bool full);

  Label pool() const { return pool_; }
  bool contains(Label a) const {
    return a >= 1 && a <= pool_ && (words_[word(a)] >> bit(a) & 1u) != 0;
  }
  // Returns true if a was present.
  bool erase(Label a);
  void insert(Label a);
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  // Smallest member, 0 when empty.
  Label first() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        fn(static_cast<Label>(i * 64 + static_cast<std::size_t>(b)) + 1);
        w &= w - 1;
      }
    }
  }
  std::vector<Label> to_vector() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  static std::size_t word(Label a) { return static_cast<std::size_t>(a - 1) / 64; }
  static unsigned bit(Label a) { return static_cast<unsigned>((a - 1) % 64); }

  Label pool_ = 0;
  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

// Per-vertex candidate label sets S_v. Every set starts as the full pool.
class CandidateSets {
 public:
  CandidateSets() = default;
  CandidateSets(int order, Label pool);

  const LabelSet& of(Vertex v) const { return sets_[v]; }
  bool contains(Vertex v, Label a) const { return sets_[v].contains(a); }
  bool erase(Vertex v, Label a) { return sets_[v].erase(a); }
  void insert(Vertex v, Label a) { sets_[v].insert(a); }
  int order() const { return static_cast<int>(sets_.size()) - 1; }

  friend bool operator==(const CandidateSets&, const CandidateSets&) = default;

 private:
  std::vector<LabelSet> sets_;
};

// Deletion kernel run after vertex v has been labeled. `labels` is indexed by
// vertex (0 = free) and already holds v's label; `weights` already holds the
// weights of v's labeled edges. For each deletion erase(vertex, label) is
// called on a free vertex; calls may repeat.
//
//   1. v's label leaves every free vertex's set.
//   2. A free neighbour y of v loses every b with b + label(v) an occupied
//      weight.
//   3. Every free z with a labeled neighbour z' loses w - label(z') for each
//      weight w created by v.
//
// Starting from full sets and an empty board, applying the kernel after every
// assignment keeps S_z equal to the set of labels that z could legally take.
template <typename Erase>
void propagate_assignment(const Graph& g, std::span<const Label> labels, const WeightSet& weights, Vertex v,
                          Erase&& erase) {
  const Label a = labels[v];
  const Label pool = weights.pool();
  const int n = g.order();

  for (Vertex u = 1; u <= n; ++u) {
    if (labels[u] == 0) erase(u, a);
  }

  for (Vertex y : g.neighbors(v)) {
    if (labels[y] != 0) continue;
    weights.for_each([&](Label w) {
      const Label b = w - a;
      if (b >= 1 && b <= pool) erase(y, b);
    });
  }

  for (Vertex x : g.neighbors(v)) {
    if (labels[x] == 0) continue;
    const Label created = a + labels[x];
    for (Vertex z = 1; z <= n; ++z) {
      if (labels[z] != 0) continue;
      for (Vertex zz : g.neighbors(z)) {
        if (labels[zz] == 0) continue;
        const Label b = created - labels[zz];
        if (b >= 1 && b <= pool) erase(z, b);
      }
    }
  }
}

}  // namespace esd
