#include "esd/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace esd {

std::optional<BipartiteParts> complete_bipartite_parts(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !g.is_connected()) return std::nullopt;
  // 2-colour from vertex 1; K_{p,q} is then the bipartite graph with p*q edges.
  std::vector<int> side(n + 1, -1);
  side[1] = 0;
  std::vector<Vertex> queue{1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        queue.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  BipartiteParts parts;
  for (Vertex v = 1; v <= n; ++v) (side[v] == 0 ? parts.small : parts.large).push_back(v);
  if (g.size() != parts.small.size() * parts.large.size()) return std::nullopt;
  if (parts.small.size() > parts.large.size()) std::swap(parts.small, parts.large);
  return parts;
}

namespace {

// Closed-form group of K_{p,q}: permute within parts, and swap the parts when
// p == q.
bool enumerate_bipartite(const BipartiteParts& parts, int n, const std::function<bool(Permutation)>& visit) {
  std::vector<Vertex> image(n + 1, 0);
  const bool swappable = parts.small.size() == parts.large.size();
  for (int swap = 0; swap < (swappable ? 2 : 1); ++swap) {
    const auto& src_small = parts.small;
    const auto& src_large = parts.large;
    std::vector<Vertex> tgt_small = swap ? parts.large : parts.small;
    std::vector<Vertex> tgt_large = swap ? parts.small : parts.large;
    std::sort(tgt_small.begin(), tgt_small.end());
    do {
      std::sort(tgt_large.begin(), tgt_large.end());
      do {
        for (std::size_t i = 0; i < src_small.size(); ++i) image[src_small[i]] = tgt_small[i];
        for (std::size_t i = 0; i < src_large.size(); ++i) image[src_large[i]] = tgt_large[i];
        if (!visit(Permutation(image))) return false;
      } while (std::next_permutation(tgt_large.begin(), tgt_large.end()));
    } while (std::next_permutation(tgt_small.begin(), tgt_small.end()));
  }
  return true;
}

class BruteForceEnumerator {
 public:
  BruteForceEnumerator(const Graph& g, const std::function<bool(Permutation)>& visit)
      : g_(g), visit_(visit), image_(g.order() + 1, 0), taken_(g.order() + 1, 0) {}

  void run() { extend(1); }

 private:
  bool extend(Vertex v) {
    const int n = g_.order();
    if (v > n) return visit_(Permutation(image_));
    for (Vertex target = 1; target <= n; ++target) {
      if (taken_[target] || g_.degree(target) != g_.degree(v)) continue;
      bool consistent = true;
      for (Vertex u = 1; u < v && consistent; ++u) {
        consistent = g_.adjacent(u, v) == g_.adjacent(image_[u], target);
      }
      if (!consistent) continue;
      image_[v] = target;
      taken_[target] = 1;
      const bool keep_going = extend(v + 1);
      taken_[target] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  const std::function<bool(Permutation)>& visit_;
  std::vector<Vertex> image_;
  std::vector<char> taken_;
};

void require_total_injective(const Graph& g, const Labeling& phi) {
  if (phi.order() != g.order()) throw InvalidLabeling("labeling order differs from graph order");
  std::vector<Label> seen(phi.values().begin(), phi.values().end());
  std::sort(seen.begin(), seen.end());
  if (!seen.empty() && seen.front() == 0) throw InvalidLabeling("labeling is not total");
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw InvalidLabeling("labeling is not injective");
  }
}

}  // namespace

void for_each_automorphism(const Graph& g, const std::function<bool(Permutation)>& visit,
                           const AutomorphismOptions& options) {
  if (auto parts = complete_bipartite_parts(g)) {
    enumerate_bipartite(*parts, g.order(), visit);
    return;
  }
  if (g.order() > options.max_order) {
    throw UnsupportedSize("automorphism enumeration capped at order " + std::to_string(options.max_order) +
                          ", graph has order " + std::to_string(g.order()));
  }
  BruteForceEnumerator(g, visit).run();
}

std::size_t count_automorphisms(const Graph& g, const AutomorphismOptions& options) {
  std::size_t count = 0;
  for_each_automorphism(
      g,
      [&](Permutation) {
        ++count;
        return true;
      },
      options);
  return count;
}

bool labelings_isomorphic(const Graph& g, const Labeling& a, const Labeling& b) {
  require_total_injective(g, a);
  require_total_injective(g, b);
  const int n = g.order();
  std::unordered_map<Label, Vertex> vertex_of;
  vertex_of.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 1; v <= n; ++v) vertex_of.emplace(b[v], v);
  std::vector<Vertex> image(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    auto it = vertex_of.find(a[v]);
    if (it == vertex_of.end()) return false;
    image[v] = it->second;
  }
  // image is a bijection; with equal edge counts, mapping edges onto edges
  // suffices.
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.adjacent(image[e.u], image[e.v]); });
}

}  // namespace esd
