#include <algorithm>
#include <random>

#include "doctest.h"
#include "esd/families.hpp"
#include "esd/game.hpp"
#include "esd/search.hpp"
#include "esd/verify.hpp"
#include "oracles.hpp"

using namespace esd;

namespace {

std::vector<Label> board(const GameState& s) {
  auto v = s.assignment().values();
  return {v.begin(), v.end()};
}

// Legal moves by the naive definition: extend and re-check everything.
std::vector<Move> naive_moves(const GameState& s) {
  std::vector<Move> out;
  auto values = board(s);
  for (Vertex v = 1; v <= s.graph().order(); ++v) {
    if (values[v - 1] != 0) continue;
    for (Label a = 1; a <= s.pool(); ++a) {
      values[v - 1] = a;
      if (oracle::naive_esd(s.graph(), values)) out.push_back({v, a});
      values[v - 1] = 0;
    }
  }
  return out;
}

Graph random_connected(int n, std::mt19937_64& rng) {
  const auto& catalog = connected_graphs(n);
  return catalog[rng() % catalog.size()];
}

}  // namespace

TEST_CASE("legal move examples") {
  GameState k2(path_graph(2), 2);
  CHECK(legal_moves(k2).size() == 4);
  auto after = apply_move(k2, {1, 1});
  CHECK(legal_moves(after) == std::vector<Move>{{2, 2}});
  CHECK(after.turn() == Player::Bob);

  GameState p3(path_graph(3), 3);
  p3 = p3.apply({2, 2});
  auto moves = legal_moves(p3);
  CHECK(std::find(moves.begin(), moves.end(), Move{1, 1}) != moves.end());
  CHECK(std::find(moves.begin(), moves.end(), Move{1, 3}) != moves.end());
  p3 = p3.apply({1, 1});
  CHECK(legal_moves(p3) == std::vector<Move>{{3, 3}});
  p3 = p3.apply({3, 3});
  CHECK(p3.status() == GameStatus::AliceWon);
  CHECK(p3.weights().weights() == std::vector<Label>{3, 5});
}

TEST_CASE("apply_move leaves the source state untouched") {
  GameState s(cycle_graph(4), 4);
  auto t = s.apply({1, 1});
  CHECK(s.is_free(1));
  CHECK_FALSE(t.is_free(1));
  CHECK(s.history().empty());
  CHECK(t.history().size() == 1);
}

TEST_CASE("move rejections") {
  GameState s(cycle_graph(4), 5);
  s = s.apply({1, 1}).apply({2, 2}).apply({3, 3});
  REQUIRE(s.ongoing());
  auto clash = s.check({4, 4});
  REQUIRE(clash);
  CHECK(clash->reason == RejectReason::WeightClash);
  CHECK(clash->weight == 5);
  CHECK(clash->new_edge == Edge{1, 4});
  CHECK(clash->existing_edge == Edge{2, 3});
  CHECK(clash->message() == "weight clash: edge {1,4} would repeat weight 5 of edge {2,3}");
  CHECK_THROWS_AS(s.apply({4, 4}), IllegalMove);

  GameState t(path_graph(3), 5);
  t = t.apply({1, 2});
  CHECK(t.check({2, 2})->reason == RejectReason::LabelUsed);
  CHECK(t.check({2, 2})->message() == "label used");
  CHECK(t.check({1, 3})->reason == RejectReason::VertexOccupied);
  CHECK(t.check({4, 3})->reason == RejectReason::VertexOutOfRange);
  CHECK(t.check({2, 6})->reason == RejectReason::LabelOutOfPool);
  CHECK(t.check({2, 0})->reason == RejectReason::LabelOutOfPool);
  CHECK_FALSE(t.check({2, 3}));
}

TEST_CASE("the game ends for Bob when no free vertex can be labeled") {
  // C_4 pool 4: 1,2,3 around the cycle leave only 4 for v4, which clashes.
  GameState s(cycle_graph(4), 4);
  s = s.apply({1, 1}).apply({2, 2}).apply({3, 3});
  CHECK(s.status() == GameStatus::BobWon);
  CHECK(legal_moves(s).empty());
  CHECK(s.check({4, 4})->reason == RejectReason::GameOver);

  GameState k2(path_graph(2), 2);
  k2 = k2.apply({1, 1}).apply({2, 2});
  CHECK(k2.status() == GameStatus::AliceWon);
}

TEST_CASE("legal_moves matches the naive definition and S_v is exact") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_connected(n, rng);
    GameState s(g, n + static_cast<Label>(rng() % 4));
    while (s.ongoing()) {
      auto moves = legal_moves(s);
      CHECK(moves == naive_moves(s));
      for (Vertex v = 1; v <= n; ++v) {
        if (!s.is_free(v)) continue;
        for (Label a = 1; a <= s.pool(); ++a) CHECK(s.candidates().contains(v, a) == !s.check({v, a}));
      }
      s = s.apply(moves[rng() % moves.size()]);
    }
    CHECK(legal_moves(s).empty());
    CHECK((s.status() == GameStatus::AliceWon) == s.assignment().is_total());
    if (s.status() == GameStatus::AliceWon) CHECK(verify_esd(g, s.assignment(), true).esd);
    CHECK((naive_moves(s).empty() || s.status() == GameStatus::AliceWon));
  }
}

TEST_CASE("candidate strategy picks the lowest vertex and label") {
  GameState k2(path_graph(2), 2);
  CHECK(alice_candidate_strategy(k2) == Move{1, 1});
  GameState s(path_graph(3), 5);
  s = s.apply({1, 1});
  CHECK(alice_candidate_strategy(s) == Move{2, 2});
  CHECK(candidate_sets_nonempty(s));
}

TEST_CASE("alice_bound") {
  CHECK(alice_bound(path_graph(2)) == 4);
  CHECK(alice_bound(star_graph(4)) == 109);
  CHECK(alice_bound(path_graph(10)) == 50);
  CHECK(alice_bound(path_graph(3)) == 15);
  // Cycle of 5: Δ = 2, 5*5 + 2*C(4,2) = 37.
  CHECK(alice_bound(cycle_graph(5)) == 37);
  CHECK(is_path_graph(path_graph(6)));
  CHECK_FALSE(is_path_graph(cycle_graph(6)));
  CHECK_FALSE(is_path_graph(star_graph(3)));
  CHECK(is_path_graph(Graph(1)));
}

TEST_CASE("strategies parse by name") {
  CHECK(parse_strategy("candidate") == StrategyKind::AliceCandidateSet);
  CHECK(parse_strategy("random") == StrategyKind::UniformRandom);
  CHECK(parse_strategy("greedy") == StrategyKind::GreedyBlocker);
  CHECK(parse_strategy("optimal") == StrategyKind::ExhaustiveOptimal);
  CHECK_THROWS_AS(parse_strategy("clever"), std::invalid_argument);
  for (auto k : {StrategyKind::AliceCandidateSet, StrategyKind::UniformRandom, StrategyKind::GreedyBlocker,
                 StrategyKind::ExhaustiveOptimal})
    CHECK(parse_strategy(to_string(k)) == k);
}

TEST_CASE("play_game examples") {
  Strategy random{StrategyKind::UniformRandom, 1};
  Strategy random2{StrategyKind::UniformRandom, 2};
  CHECK(play_game(path_graph(2), 2, Strategy{}, random).winner == Player::Alice);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rec = play_game(star_graph(5), 6, Strategy{StrategyKind::UniformRandom, seed},
                         Strategy{StrategyKind::UniformRandom, seed + 1000});
    CHECK(rec.winner == Player::Alice);
    CHECK(rec.transcript.size() == 6);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto rec = play_game(fan_graph(8), 8, Strategy{StrategyKind::UniformRandom, seed}, random2);
    CHECK(rec.winner == Player::Bob);
  }
  auto bob_first = play_game(path_graph(2), 2, Strategy{}, random, {.first = Player::Bob});
  CHECK(bob_first.winner == Player::Alice);
  CHECK(bob_first.final_state.first_player() == Player::Bob);
}

TEST_CASE("random strategies are reproducible from the seed") {
  Strategy a{StrategyKind::UniformRandom, 42};
  Strategy b{StrategyKind::UniformRandom, 43};
  auto r1 = play_game(grid_graph(3, 3), 12, a, b);
  auto r2 = play_game(grid_graph(3, 3), 12, a, b);
  CHECK(r1.transcript == r2.transcript);
}

TEST_CASE("transcripts replay to the same terminal state") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_connected(n, rng);
    const Label pool = n + static_cast<Label>(rng() % 3);
    const Player first = rng() % 2 ? Player::Alice : Player::Bob;
    auto rec = play_game(g, pool, Strategy{StrategyKind::UniformRandom, rng()},
                         Strategy{StrategyKind::GreedyBlocker}, {.first = first});
    auto again = replay(g, pool, rec.transcript, first);
    CHECK(again.status() == rec.final_state.status());
    CHECK(again.assignment() == rec.final_state.assignment());
    CHECK(again.turn() == rec.final_state.turn());
  }
  const std::vector<Move> bad{{1, 1}, {1, 2}};
  CHECK_THROWS_AS(replay(path_graph(3), 3, bad), IllegalMove);
}

TEST_CASE("faulty strategies are reported by name") {
  NamedPicker good = make_picker(Strategy{});
  NamedPicker repeat{"repeat-one", [](const GameState&) { return std::optional<Move>(Move{1, 1}); }};
  NamedPicker silent{"silent", [](const GameState&) { return std::optional<Move>(); }};
  try {
    play_game(path_graph(3), 3, good, repeat);
    FAIL("expected a fault");
  } catch (const StrategyFault& e) {
    CHECK(std::string(e.what()).find("repeat-one") != std::string::npos);
  }
  CHECK_THROWS_AS(play_game(path_graph(3), 3, silent, good), StrategyFault);
}

TEST_CASE("solve_game examples") {
  CHECK(solve_game(complete_bipartite_graph(2, 3), 5).winner == Player::Bob);
  CHECK(solve_game(star_graph(3), 4).winner == Player::Alice);
  const bool p3_alice = oracle::alice_wins(path_graph(3), 3);
  CHECK(p3_alice);
  auto p3 = solve_game(path_graph(3), 3);
  CHECK((p3.winner == Player::Alice) == p3_alice);
  CHECK(p3.tree_size > 0);
  CHECK_THROWS_AS(solve_game(path_graph(7), 7), GameGuardExceeded);
  CHECK_THROWS_AS(solve_game(path_graph(3), 13), GameGuardExceeded);
}

TEST_CASE("solve_game agrees with plain minimax on small graphs") {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (Label l = n; l <= n + 2; ++l) {
        const bool alice = oracle::alice_wins(g, l);
        CHECK((solve_game(g, l).winner == Player::Alice) == alice);
      }
    }
  }
  for (const Graph& g : connected_graphs(5)) {
    CHECK((solve_game(g, 5).winner == Player::Alice) == oracle::alice_wins(g, 5));
  }
}

TEST_CASE("no canonical labeling means Bob wins the canonical game") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      SearchConfig cfg;
      cfg.pool = n;
      if (solve(g, cfg).status == SearchStatus::ExhaustedNoneExists) CHECK(solve_game(g, n).winner == Player::Bob);
    }
  }
}

TEST_CASE("optimal picker wins whenever the position is won") {
  auto optimal = make_picker(Strategy{StrategyKind::ExhaustiveOptimal});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto rec = play_game(star_graph(3), 4, optimal, make_picker(Strategy{StrategyKind::UniformRandom, seed}));
    CHECK(rec.winner == Player::Alice);
    auto bob = play_game(complete_bipartite_graph(2, 3), 5, make_picker(Strategy{StrategyKind::UniformRandom, seed}),
                         optimal);
    CHECK(bob.winner == Player::Bob);
  }
}

TEST_CASE("small-part blocker beats every Alice opening on K_{2,q}") {
  for (int q = 2; q <= 4; ++q) {
    Graph g = complete_bipartite_graph(2, q);
    const Label n = q + 2;
    GameState start(g, n);
    for (const Move& opening : legal_moves(start)) {
      auto s = start.apply(opening);
      auto reply = small_part_blocker(g).pick(s);
      REQUIRE(reply);
      s = s.apply(*reply);
      if (s.ongoing()) CHECK(solve_game(s, {.max_order = 6, .max_pool = 12}).winner == Player::Bob);
      else CHECK(s.status() == GameStatus::BobWon);
    }
  }
}

TEST_CASE("small-part blocker wins full games against the optimal Alice") {
  for (int q = 2; q <= 4; ++q) {
    Graph g = complete_bipartite_graph(2, q);
    auto rec = play_game(g, q + 2, make_picker(Strategy{StrategyKind::ExhaustiveOptimal}), small_part_blocker(g));
    CHECK(rec.winner == Player::Bob);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      CHECK(play_game(g, q + 2, make_picker(Strategy{StrategyKind::UniformRandom, seed}), small_part_blocker(g)).winner ==
            Player::Bob);
    }
  }
  CHECK_THROWS_AS(small_part_blocker(cycle_graph(5)), std::invalid_argument);
  CHECK_THROWS_AS(small_part_blocker(complete_bipartite_graph(3, 3)), std::invalid_argument);
}
