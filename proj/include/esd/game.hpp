#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "esd/candidates.hpp"
#include "esd/graph.hpp"
#include "esd/weights.hpp"

namespace esd {

enum class Player { Alice, Bob };
enum class GameStatus { Ongoing, AliceWon, BobWon };

Player other(Player p);
std::string to_string(Player p);
std::string to_string(GameStatus s);

struct Move {
  Vertex vertex = 0;
  Label label = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

enum class RejectReason { GameOver, VertexOutOfRange, VertexOccupied, LabelOutOfPool, LabelUsed, WeightClash };

struct MoveRejection {
  RejectReason reason = RejectReason::GameOver;
  // WeightClash only: the edge the move would create and the edge already
  // carrying the same weight.
  Edge new_edge{};
  Edge existing_edge{};
  Label weight = 0;

  std::string message() const;
};

class IllegalMove : public std::invalid_argument {
 public:
  explicit IllegalMove(MoveRejection rejection)
      : std::invalid_argument(rejection.message()), rejection_(rejection) {}
  const MoveRejection& rejection() const { return rejection_; }

 private:
  MoveRejection rejection_;
};

// A strategy produced a move that the rules reject.
class StrategyFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// solve_game refused an instance above its size guard.
class GameGuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Position of the Maker-Breaker ESD labeling game. A value type: apply()
// returns the successor and leaves *this untouched.
class GameState {
 public:
  GameState(std::shared_ptr<const Graph> graph, Label pool, Player first = Player::Alice);
  GameState(const Graph& graph, Label pool, Player first = Player::Alice);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const { return graph_; }
  Label pool() const { return pool_; }
  Player first_player() const { return first_; }
  Player turn() const { return turn_; }
  GameStatus status() const { return status_; }
  bool ongoing() const { return status_ == GameStatus::Ongoing; }

  const Labeling& assignment() const { return assignment_; }
  bool is_free(Vertex v) const { return labels_[v] == 0; }
  bool label_used(Label a) const { return used_.contains(a); }
  const WeightSet& weights() const { return weights_; }
  // S_v, maintained by the three-step deletion kernel. Meaningful for free
  // vertices only.
  const CandidateSets& candidates() const { return candidates_; }
  const std::vector<Move>& history() const { return history_; }

  // Why m is illegal here, or nullopt if it is legal.
  std::optional<MoveRejection> check(const Move& m) const;
  // Throws IllegalMove if check(m) reports a rejection.
  GameState apply(const Move& m) const;

 private:
  void refresh_status();

  std::shared_ptr<const Graph> graph_;
  Label pool_;
  Player first_;
  Player turn_;
  GameStatus status_ = GameStatus::Ongoing;
  Labeling assignment_;
  std::vector<Label> labels_;
  LabelSet used_;
  WeightSet weights_;
  CandidateSets candidates_;
  std::vector<Move> history_;
};

// Every legal move, ordered by vertex then label. Empty once the game is over.
// Legality is decided directly from the used labels and weights, independently
// of the candidate sets.
std::vector<Move> legal_moves(const GameState& s);

GameState apply_move(const GameState& s, const Move& m);

// The candidate-set strategy: the smallest label of S_v for the lowest-index
// free vertex v whose S_v is non-empty. nullopt when every S_v is empty.
std::optional<Move> alice_candidate_strategy(const GameState& s);

// True when every free vertex still has a non-empty candidate set, the
// condition the labels-bound argument maintains for Alice.
bool candidate_sets_nonempty(const GameState& s);

// (Δ^2 + 1) n + Δ C(n-1, 2), or min(that, 5n) for paths.
Label alice_bound(const Graph& g);
bool is_path_graph(const Graph& g);

enum class StrategyKind { AliceCandidateSet, UniformRandom, GreedyBlocker, ExhaustiveOptimal };

struct Strategy {
  StrategyKind kind = StrategyKind::AliceCandidateSet;
  std::optional<std::uint64_t> seed;
};

std::string to_string(StrategyKind kind);
// Accepts "candidate", "random", "greedy", "optimal".
StrategyKind parse_strategy(std::string_view name);

// Chooses a move for the player to move; nullopt means it has none to offer.
using MovePicker = std::function<std::optional<Move>(const GameState&)>;

struct NamedPicker {
  std::string name;
  MovePicker pick;
};

struct GameSolveOptions {
  int max_order = 6;
  Label max_pool = 12;
};

// Builds a stateful picker. Random pickers own their generator; optimal
// pickers own a memo table.
NamedPicker make_picker(const Strategy& strategy, GameSolveOptions options = {});

// Bob's K_{2,q} strategy: put a label strictly between 1 and n on a free
// vertex of a part of size 2 that holds no such label yet, preferring a part
// that already has a labeled vertex (for q = 2 both parts qualify); otherwise
// the first legal move. Throws
// std::invalid_argument unless g is K_{2,q}.
NamedPicker small_part_blocker(const Graph& g);

struct PlayOptions {
  Player first = Player::Alice;
};

struct GameRecord {
  Player winner = Player::Bob;
  std::vector<Move> transcript;
  GameState final_state;  // position after the last move
};

// Plays to a terminal position. Throws StrategyFault naming the strategy if
// it returns an illegal move or no move while legal moves exist.
GameRecord play_game(const Graph& g, Label pool, const NamedPicker& alice, const NamedPicker& bob,
                     PlayOptions options = {});
GameRecord play_game(const Graph& g, Label pool, const Strategy& alice, const Strategy& bob,
                     PlayOptions options = {});

// Re-applies a transcript from the empty board. Throws IllegalMove.
GameState replay(const Graph& g, Label pool, std::span<const Move> moves, Player first = Player::Alice);

struct GameSolution {
  Player winner = Player::Bob;
  // Distinct positions evaluated.
  std::size_t tree_size = 0;
};

// Exact winner under optimal play by memoised game-tree search. Throws
// GameGuardExceeded above options.max_order or options.max_pool.
GameSolution solve_game(const Graph& g, Label pool, GameSolveOptions options = {}, Player first = Player::Alice);
GameSolution solve_game(const GameState& from, GameSolveOptions options = {});

}  // namespace esd
