#include "esd/game.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

#include "esd/automorphism.hpp"

namespace esd {

Player other(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }

std::string to_string(Player p) { return p == Player::Alice ? "Alice" : "Bob"; }

std::string to_string(GameStatus s) {
  switch (s) {
    case GameStatus::Ongoing: return "ongoing";
    case GameStatus::AliceWon: return "AliceWon";
    case GameStatus::BobWon: return "BobWon";
  }
  return {};
}

namespace {

std::string edge_text(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace

std::string MoveRejection::message() const {
  switch (reason) {
    case RejectReason::GameOver: return "game is over";
    case RejectReason::VertexOutOfRange: return "vertex out of range";
    case RejectReason::VertexOccupied: return "vertex already labeled";
    case RejectReason::LabelOutOfPool: return "label outside pool";
    case RejectReason::LabelUsed: return "label used";
    case RejectReason::WeightClash:
      return "weight clash: edge " + edge_text(new_edge) + " would repeat weight " + std::to_string(weight) +
             " of edge " + edge_text(existing_edge);
  }
  return {};
}

GameState::GameState(std::shared_ptr<const Graph> graph, Label pool, Player first)
    : graph_(std::move(graph)),
      pool_(pool),
      first_(first),
      turn_(first),
      assignment_(graph_->order(), pool),
      labels_(static_cast<std::size_t>(graph_->order()) + 1, 0),
      used_(pool, false),
      weights_(pool),
      candidates_(graph_->order(), pool) {
  if (pool < 1) throw std::invalid_argument("label pool must be positive");
  refresh_status();
}

GameState::GameState(const Graph& graph, Label pool, Player first)
    : GameState(std::make_shared<const Graph>(graph), pool, first) {}

std::optional<MoveRejection> GameState::check(const Move& m) const {
  MoveRejection r;
  if (!ongoing()) return r;
  if (m.vertex < 1 || m.vertex > graph_->order()) {
    r.reason = RejectReason::VertexOutOfRange;
    return r;
  }
  if (labels_[m.vertex] != 0) {
    r.reason = RejectReason::VertexOccupied;
    return r;
  }
  if (m.label < 1 || m.label > pool_) {
    r.reason = RejectReason::LabelOutOfPool;
    return r;
  }
  if (used_.contains(m.label)) {
    r.reason = RejectReason::LabelUsed;
    return r;
  }
  for (Vertex x : graph_->neighbors(m.vertex)) {
    if (labels_[x] == 0) continue;
    const Label w = m.label + labels_[x];
    if (auto holder = weights_.owner(w)) {
      r.reason = RejectReason::WeightClash;
      r.new_edge = Edge::of(m.vertex, x);
      r.existing_edge = *holder;
      r.weight = w;
      return r;
    }
  }
  return std::nullopt;
}

GameState GameState::apply(const Move& m) const {
  if (auto rejection = check(m)) throw IllegalMove(*rejection);
  GameState next = *this;
  next.labels_[m.vertex] = m.label;
  next.assignment_.assign(m.vertex, m.label);
  next.used_.insert(m.label);
  for (Vertex x : graph_->neighbors(m.vertex)) {
    if (next.labels_[x] != 0 && x != m.vertex) next.weights_.insert(m.label + next.labels_[x], Edge::of(m.vertex, x));
  }
  propagate_assignment(*graph_, next.labels_, next.weights_, m.vertex,
                       [&](Vertex u, Label b) { next.candidates_.erase(u, b); });
  next.history_.push_back(m);
  next.turn_ = other(turn_);
  next.refresh_status();
  return next;
}

void GameState::refresh_status() {
  bool any_free = false;
  bool any_move = false;
  for (Vertex v = 1; v <= graph_->order(); ++v) {
    if (labels_[v] != 0) continue;
    any_free = true;
    if (!candidates_.of(v).empty()) {
      any_move = true;
      break;
    }
  }
  if (!any_free) {
    status_ = GameStatus::AliceWon;
  } else {
    status_ = any_move ? GameStatus::Ongoing : GameStatus::BobWon;
  }
}

std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> out;
  if (!s.ongoing()) return out;
  const Graph& g = s.graph();
  const Labeling& phi = s.assignment();
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (!s.is_free(v)) continue;
    for (Label a = 1; a <= s.pool(); ++a) {
      if (s.label_used(a)) continue;
      const bool clash = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex x) {
        return phi[x] != 0 && s.weights().contains(a + phi[x]);
      });
      if (!clash) out.push_back({v, a});
    }
  }
  return out;
}

GameState apply_move(const GameState& s, const Move& m) { return s.apply(m); }

std::optional<Move> alice_candidate_strategy(const GameState& s) {
  if (!s.ongoing()) return std::nullopt;
  for (Vertex v = 1; v <= s.graph().order(); ++v) {
    if (!s.is_free(v)) continue;
    const LabelSet& options = s.candidates().of(v);
    if (!options.empty()) return Move{v, options.first()};
  }
  return std::nullopt;
}

bool candidate_sets_nonempty(const GameState& s) {
  for (Vertex v = 1; v <= s.graph().order(); ++v) {
    if (s.is_free(v) && s.candidates().of(v).empty()) return false;
  }
  return true;
}

bool is_path_graph(const Graph& g) {
  return g.order() >= 1 && g.is_connected() && g.size() + 1 == static_cast<std::size_t>(g.order()) &&
         g.max_degree() <= 2;
}

Label alice_bound(const Graph& g) {
  const Label n = g.order();
  const Label delta = g.max_degree();
  const Label pairs = n >= 3 ? (n - 1) * (n - 2) / 2 : 0;
  const Label general = (delta * delta + 1) * n + delta * pairs;
  return is_path_graph(g) ? std::min(general, 5 * n) : general;
}

std::string to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::AliceCandidateSet: return "candidate";
    case StrategyKind::UniformRandom: return "random";
    case StrategyKind::GreedyBlocker: return "greedy";
    case StrategyKind::ExhaustiveOptimal: return "optimal";
  }
  return {};
}

StrategyKind parse_strategy(std::string_view name) {
  if (name == "candidate") return StrategyKind::AliceCandidateSet;
  if (name == "random") return StrategyKind::UniformRandom;
  if (name == "greedy") return StrategyKind::GreedyBlocker;
  if (name == "optimal") return StrategyKind::ExhaustiveOptimal;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (candidate|random|greedy|optimal)");
}

namespace {

class GameTreeSolver {
 public:
  GameTreeSolver(const GameState& shape, const GameSolveOptions& options)
      : graph_(shape.shared_graph()), pool_(shape.pool()), first_(shape.first_player()) {
    const int n = graph_->order();
    if (n > options.max_order || pool_ > options.max_pool) {
      throw GameGuardExceeded("game-tree search limited to n <= " + std::to_string(options.max_order) +
                              " and l <= " + std::to_string(options.max_pool));
    }
    bits_ = std::bit_width(static_cast<std::uint64_t>(pool_));
    if (static_cast<long>(n) * bits_ > 63) throw GameGuardExceeded("position encoding exceeds 63 bits");
  }

  bool matches(const GameState& s) const {
    return s.shared_graph() == graph_ && s.pool() == pool_ && s.first_player() == first_;
  }

  Player winner(const GameState& s) {
    if (s.status() == GameStatus::AliceWon) return Player::Alice;
    if (s.status() == GameStatus::BobWon) return Player::Bob;
    const std::uint64_t k = key(s);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    const Player mover = s.turn();
    Player result = other(mover);
    for (const Move& m : legal_moves(s)) {
      if (winner(s.apply(m)) == mover) {
        result = mover;
        break;
      }
    }
    memo_.emplace(k, result);
    return result;
  }

  std::size_t size() const { return memo_.size(); }

 private:
  std::uint64_t key(const GameState& s) const {
    std::uint64_t k = 0;
    for (Label a : s.assignment().values()) k = (k << bits_) | static_cast<std::uint64_t>(a);
    return k;
  }

  std::shared_ptr<const Graph> graph_;
  Label pool_;
  Player first_;
  int bits_ = 0;
  std::unordered_map<std::uint64_t, Player> memo_;
};

std::size_t candidate_mass(const GameState& s) {
  std::size_t total = 0;
  for (Vertex v = 1; v <= s.graph().order(); ++v) {
    if (s.is_free(v)) total += s.candidates().of(v).count();
  }
  return total;
}

}  // namespace

NamedPicker make_picker(const Strategy& strategy, GameSolveOptions options) {
  const std::string name = to_string(strategy.kind);
  switch (strategy.kind) {
    case StrategyKind::AliceCandidateSet:
      return {name, [](const GameState& s) { return alice_candidate_strategy(s); }};
    case StrategyKind::UniformRandom: {
      auto rng = std::make_shared<std::mt19937_64>(strategy.seed.value_or(0x5eedULL));
      return {name, [rng](const GameState& s) -> std::optional<Move> {
                const auto moves = legal_moves(s);
                if (moves.empty()) return std::nullopt;
                std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
                return moves[pick(*rng)];
              }};
    }
    case StrategyKind::GreedyBlocker:
      return {name, [](const GameState& s) -> std::optional<Move> {
                std::optional<Move> best;
                std::size_t best_mass = 0;
                for (const Move& m : legal_moves(s)) {
                  const std::size_t mass = candidate_mass(s.apply(m));
                  if (!best || mass < best_mass) {
                    best = m;
                    best_mass = mass;
                  }
                }
                return best;
              }};
    case StrategyKind::ExhaustiveOptimal: {
      auto solver = std::make_shared<std::unique_ptr<GameTreeSolver>>();
      return {name, [solver, options](const GameState& s) -> std::optional<Move> {
                if (!*solver || !(*solver)->matches(s)) *solver = std::make_unique<GameTreeSolver>(s, options);
                const auto moves = legal_moves(s);
                for (const Move& m : moves) {
                  if ((*solver)->winner(s.apply(m)) == s.turn()) return m;
                }
                if (moves.empty()) return std::nullopt;
                return moves.front();
              }};
    }
  }
  throw std::invalid_argument("unknown strategy kind");
}

NamedPicker small_part_blocker(const Graph& g) {
  const auto parts = complete_bipartite_parts(g);
  if (!parts || parts->small.size() != 2) throw std::invalid_argument("small-part blocker needs K_{2,q}");
  // In K_{2,2} either part may end up holding 1 and n, so both are targets.
  std::vector<std::vector<Vertex>> targets{parts->small};
  if (parts->large.size() == 2) targets.push_back(parts->large);
  return {"small-part-blocker", [targets = std::move(targets)](const GameState& s) -> std::optional<Move> {
            const Label n = s.graph().order();
            const auto inner = [&](Vertex v) { return !s.is_free(v) && s.assignment()[v] > 1 && s.assignment()[v] < n; };
            // A part Alice has started on comes first: it is the one she is
            // trying to fill with 1 and n.
            auto order = targets;
            std::stable_partition(order.begin(), order.end(), [&](const std::vector<Vertex>& part) {
              return std::any_of(part.begin(), part.end(), [&](Vertex v) { return !s.is_free(v); });
            });
            for (const auto& part : order) {
              if (std::any_of(part.begin(), part.end(), inner)) continue;
              for (Vertex v : part) {
                if (!s.is_free(v)) continue;
                for (Label w = 2; w < n; ++w) {
                  if (!s.check({v, w})) return Move{v, w};
                }
              }
            }
            const auto moves = legal_moves(s);
            if (moves.empty()) return std::nullopt;
            return moves.front();
          }};
}

GameRecord play_game(const Graph& g, Label pool, const NamedPicker& alice, const NamedPicker& bob,
                     PlayOptions options) {
  GameState s(g, pool, options.first);
  while (s.ongoing()) {
    const NamedPicker& mover = s.turn() == Player::Alice ? alice : bob;
    const std::optional<Move> m = mover.pick(s);
    if (!m) throw StrategyFault("strategy '" + mover.name + "' offered no move although legal moves exist");
    if (auto rejection = s.check(*m)) {
      throw StrategyFault("strategy '" + mover.name + "' played an illegal move: " + rejection->message());
    }
    s = s.apply(*m);
  }
  const Player winner = s.status() == GameStatus::AliceWon ? Player::Alice : Player::Bob;
  std::vector<Move> transcript = s.history();
  return GameRecord{winner, std::move(transcript), std::move(s)};
}

GameRecord play_game(const Graph& g, Label pool, const Strategy& alice, const Strategy& bob, PlayOptions options) {
  return play_game(g, pool, make_picker(alice), make_picker(bob), options);
}

GameState replay(const Graph& g, Label pool, std::span<const Move> moves, Player first) {
  GameState s(g, pool, first);
  for (const Move& m : moves) s = s.apply(m);
  return s;
}

GameSolution solve_game(const GameState& from, GameSolveOptions options) {
  GameTreeSolver solver(from, options);
  const Player winner = solver.winner(from);
  return {winner, solver.size()};
}

GameSolution solve_game(const Graph& g, Label pool, GameSolveOptions options, Player first) {
  return solve_game(GameState(g, pool, first), options);
}

}  // namespace esd
