#include <random>
#include <set>

#include "doctest.h"
#include "esd/candidates.hpp"
#include "esd/errors.hpp"
#include "esd/families.hpp"
#include "esd/graph.hpp"
#include "esd/verify.hpp"
#include "esd/weights.hpp"
#include "oracles.hpp"

using namespace esd;

namespace {

Labeling labels(std::initializer_list<Label> values, Label pool = 0) {
  std::vector<Label> v(values);
  if (pool == 0) pool = static_cast<Label>(v.size());
  return Labeling::from_values(pool, v);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph rejects loops, duplicates and bad endpoints") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(Graph(-1), GraphError);
}

TEST_CASE("graph normalises and sorts edges") {
  Graph g(4, {{3, 1}, {2, 1}, {4, 3}});
  REQUIRE(g.size() == 3);
  CHECK(g.edges()[0] == Edge{1, 2});
  CHECK(g.edges()[1] == Edge{1, 3});
  CHECK(g.edges()[2] == Edge{3, 4});
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(2, 4));
  CHECK(g.is_tree());
  CHECK(g.is_connected());
  CHECK_FALSE(Graph(4, {{1, 2}, {3, 4}}).is_connected());
  CHECK(Graph(1).is_tree());
}

TEST_CASE("labeling bookkeeping") {
  Labeling phi(3, 5);
  CHECK(phi.assigned_count() == 0);
  phi.assign(2, 5);
  CHECK(phi.assigned(2));
  CHECK(phi.get(2) == 5);
  CHECK(phi.get(1) == std::nullopt);
  CHECK_THROWS_AS(phi.assign(1, 6), InvalidLabeling);
  CHECK_THROWS_AS(phi.assign(1, 0), InvalidLabeling);
  CHECK_THROWS_AS(phi.assign(4, 1), InvalidLabeling);
  phi.clear(2);
  CHECK_FALSE(phi.is_total());
  CHECK(labels({3, 1, 2}).is_total());
}

TEST_CASE("weight set occupancy") {
  WeightSet w(5);
  CHECK(w.max_weight() == 9);
  CHECK(w.insert(5, {1, 4}));
  CHECK_FALSE(w.insert(5, {2, 3}));
  CHECK(w.owner(5) == Edge{1, 4});
  CHECK(w.contains(5));
  CHECK_FALSE(w.contains(6));
  CHECK_FALSE(w.contains(100));
  CHECK_THROWS_AS(w.insert(10, {1, 2}), std::out_of_range);
  CHECK_THROWS_AS(w.insert(2, {1, 2}), std::out_of_range);
  w.insert(3, {1, 2});
  CHECK(w.weights() == std::vector<Label>{3, 5});
  w.erase(5);
  CHECK(w.size() == 1);
}

TEST_CASE("verify_esd examples") {
  CHECK(verify_esd(path_graph(4), labels({1, 2, 3, 4})).esd);
  CHECK(verify_esd(path_graph(2), labels({1, 2})).esd);

  auto r = verify_esd(cycle_graph(4), labels({1, 2, 3, 4}));
  CHECK_FALSE(r.esd);
  REQUIRE(r.conflict);
  CHECK(r.conflict->kind == ConflictKind::WeightClash);
  CHECK(r.conflict->value == 5);
  std::set<Edge> pair{r.conflict->first, r.conflict->second};
  CHECK(pair == std::set<Edge>{{1, 4}, {2, 3}});
}

TEST_CASE("verify_esd reports duplicate labels and invalid input") {
  auto r = verify_esd(path_graph(3), labels({2, 1, 2}, 3));
  CHECK_FALSE(r.esd);
  REQUIRE(r.conflict);
  CHECK(r.conflict->kind == ConflictKind::DuplicateLabel);
  CHECK(r.conflict->vertices == std::pair<Vertex, Vertex>{1, 3});
  CHECK(r.conflict->value == 2);

  CHECK_THROWS_AS(verify_esd(path_graph(3), labels({1, 2})), InvalidLabeling);
  Labeling partial(3, 3);
  partial.assign(1, 1);
  CHECK(verify_esd(path_graph(3), partial).esd);
  CHECK_THROWS_AS(verify_esd(path_graph(3), partial, true), InvalidLabeling);
}

TEST_CASE("verify_esd accepts disconnected graphs") {
  Graph g(4, {{1, 2}, {3, 4}});
  CHECK(verify_esd(g, labels({1, 4, 2, 3})).esd == false);
  CHECK(verify_esd(g, labels({1, 2, 3, 4})).esd);
}

TEST_CASE("canonical_feasible") {
  CHECK_FALSE(canonical_feasible(complete_graph(4)));
  CHECK(canonical_feasible(complete_graph(3)));
  CHECK(canonical_feasible(fan_graph(8)));
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 30; ++n) CHECK(canonical_feasible(random_tree(n, rng)));
}

TEST_CASE("edge_weights examples") {
  auto w = edge_weights(path_graph(2), labels({1, 2}));
  REQUIRE(w.size() == 1);
  CHECK(w[0] == WeightedEdge{{1, 2}, 3});

  auto c5 = edge_weights(cycle_graph(5), labels({1, 2, 3, 4, 5}));
  std::vector<Label> got;
  for (const auto& we : c5) got.push_back(we.weight);
  // Edge order: {1,2},{1,5},{2,3},{3,4},{4,5}.
  CHECK(got == std::vector<Label>{3, 6, 5, 7, 9});

  Labeling partial(3, 3);
  partial.assign(1, 1);
  partial.assign(2, 2);
  CHECK(edge_weights(path_graph(3), partial).size() == 1);
}

TEST_CASE("verify_esd agrees with the naive check on random graphs up to 8 vertices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng);
    const Label pool = n + static_cast<Label>(rng() % 4);
    std::vector<Label> pick(static_cast<std::size_t>(pool));
    std::iota(pick.begin(), pick.end(), 1);
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(static_cast<std::size_t>(n));
    auto phi = Labeling::from_values(pool, pick);
    CHECK(verify_esd(g, phi).esd == oracle::naive_esd(g, pick));
  }
}

TEST_CASE("canonical ESD labelings keep weights in [3, 2n-1]") {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      oracle::for_each_injective(n, n, [&](const std::vector<Label>& v) {
        auto phi = Labeling::from_values(n, v);
        if (!verify_esd(g, phi).esd) return;
        for (const auto& we : edge_weights(g, phi)) {
          CHECK(we.weight >= 3);
          CHECK(we.weight <= 2 * n - 1);
        }
      });
    }
  }
}

TEST_CASE("connected graph catalog sizes") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
  for (const Graph& g : connected_graphs(5)) CHECK(g.is_connected());
}

TEST_CASE("label sets") {
  LabelSet s(130, true);
  CHECK(s.count() == 130);
  CHECK(s.erase(65));
  CHECK_FALSE(s.erase(65));
  CHECK_FALSE(s.contains(65));
  CHECK_FALSE(s.contains(0));
  CHECK_FALSE(s.contains(131));
  CHECK(s.first() == 1);
  s.insert(65);
  CHECK(s.count() == 130);
  LabelSet e(10, false);
  CHECK(e.empty());
  CHECK(e.first() == 0);
  e.insert(7);
  e.insert(3);
  CHECK(e.to_vector() == std::vector<Label>{3, 7});
}

TEST_CASE("propagation kernel makes candidate sets exact") {
  // Replays random move sequences and compares every S_v with the set of
  // labels a naive check accepts.
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, 0.5, rng);
    const Label pool = n + static_cast<Label>(rng() % 5);
    CandidateSets cs(n, pool);
    WeightSet ws(pool);
    std::vector<Label> lab(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Label> values(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
      std::vector<std::pair<Vertex, Label>> legal;
      for (Vertex v = 1; v <= n; ++v) {
        if (lab[v] != 0) continue;
        for (Label a = 1; a <= pool; ++a) {
          values[v - 1] = a;
          const bool ok = oracle::naive_esd(g, values);
          values[v - 1] = 0;
          CHECK(cs.contains(v, a) == ok);
          if (ok) legal.push_back({v, a});
        }
      }
      if (legal.empty()) break;
      auto [v, a] = legal[rng() % legal.size()];
      lab[v] = a;
      values[v - 1] = a;
      for (Vertex x : g.neighbors(v))
        if (lab[x] != 0) REQUIRE(ws.insert(a + lab[x], Edge::of(v, x)));
      propagate_assignment(g, std::span<const Label>(lab), ws, v, [&](Vertex u, Label b) { cs.erase(u, b); });
    }
  }
}
