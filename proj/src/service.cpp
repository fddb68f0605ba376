#include "esd/service.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include "esd/families.hpp"
#include "esd/io.hpp"

namespace esd::service {

struct SessionStore::Session {
  Session(std::string id, GameState state, Player human, Strategy strategy,
          std::chrono::steady_clock::time_point created)
      : id(std::move(id)),
        state(std::move(state)),
        human(human),
        engine_strategy(strategy),
        engine(make_picker(strategy)),
        created_at(created),
        touched_at(created) {}

  std::mutex mutex;
  std::string id;
  GameState state;
  Player human;
  Strategy engine_strategy;
  NamedPicker engine;
  std::chrono::steady_clock::time_point created_at;
  std::chrono::steady_clock::time_point touched_at;
};

namespace {

Response error(int status, const std::string& message) { return {status, {{"error", message}}}; }

nlohmann::json legal_moves_json(const GameState& s, Player human) {
  nlohmann::json moves = nlohmann::json::array();
  if (s.ongoing() && s.turn() == human) {
    for (const Move& m : legal_moves(s)) moves.push_back(move_to_json(m));
  }
  return moves;
}

Player parse_side(const std::string& side) {
  if (side == "Alice" || side == "alice") return Player::Alice;
  if (side == "Bob" || side == "bob") return Player::Bob;
  throw std::invalid_argument("side must be \"Alice\" or \"Bob\"");
}

}  // namespace

SessionStore::SessionStore(SessionOptions options) : options_(std::move(options)) {
  std::random_device rd;
  id_state_ = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::chrono::steady_clock::time_point SessionStore::now() const {
  return options_.clock ? options_.clock() : std::chrono::steady_clock::now();
}

std::string SessionStore::fresh_id() {
  std::lock_guard lock(id_mutex_);
  std::mt19937_64 mix(id_state_++);
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << mix() << std::setw(16) << mix();
  return out.str();
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

std::size_t SessionStore::expire_idle() {
  const auto cutoff = now() - options_.idle_timeout;
  std::unique_lock lock(mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) {
    std::lock_guard session_lock(entry.second->mutex);
    return entry.second->touched_at < cutoff;
  });
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) {
  expire_idle();
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

namespace {

nlohmann::json snapshot(const std::string& id, const GameState& s, Player human) {
  nlohmann::json transcript = nlohmann::json::array();
  for (const Move& m : s.history()) transcript.push_back(move_to_json(m));
  nlohmann::json weights = nlohmann::json::array();
  for (const WeightedEdge& we : edge_weights(s.graph(), s.assignment())) {
    weights.push_back({{"edge", {we.edge.u, we.edge.v}}, {"weight", we.weight}});
  }
  return {{"id", id},
          {"graph", graph_to_json(s.graph())},
          {"l", s.pool()},
          {"assignment", labeling_to_json(s.assignment())["labels"]},
          {"usedWeights", std::move(weights)},
          {"turn", to_string(s.turn())},
          {"status", to_string(s.status())},
          {"humanPlays", to_string(human)},
          {"transcript", std::move(transcript)},
          {"legalMoves", legal_moves_json(s, human)}};
}

// Lets the engine move while it is its turn; returns its last move.
std::optional<Move> engine_reply(GameState& s, Player human, const NamedPicker& engine) {
  std::optional<Move> last;
  while (s.ongoing() && s.turn() != human) {
    auto m = engine.pick(s);
    if (!m || s.check(*m)) throw StrategyFault("engine strategy '" + engine.name + "' failed to move");
    s = s.apply(*m);
    last = m;
  }
  return last;
}

}  // namespace

Response SessionStore::create_session(const nlohmann::json& body) {
  if (!body.is_object()) return error(400, "request body must be a JSON object");
  try {
    Graph g;
    if (body.contains("family")) {
      if (!body["family"].is_string()) return error(400, "\"family\" must be a string such as \"star:5\"");
      g = build_graph(parse_family(body["family"].get<std::string>()));
    } else if (body.contains("graph")) {
      g = graph_from_json(body["graph"]);
    } else {
      return error(400, "provide \"family\" or \"graph\"");
    }
    if (g.order() < 1) return error(400, "graph needs at least one vertex");
    const Label pool = body.contains("l") ? body["l"].get<Label>() : g.order();
    if (pool < 1 || pool > 4096) return error(400, "\"l\" must lie in 1..4096");
    const Player human = parse_side(body.value("side", std::string("Alice")));
    Strategy strategy{parse_strategy(body.value("strategy", std::string("candidate"))), std::nullopt};
    if (body.contains("seed")) strategy.seed = body["seed"].get<std::uint64_t>();
    const Player first = body.value("bobStarts", false) ? Player::Bob : Player::Alice;

    auto session = std::make_shared<Session>(fresh_id(), GameState(g, pool, first), human, strategy, now());
    const std::optional<Move> reply = engine_reply(session->state, human, session->engine);

    nlohmann::json out = snapshot(session->id, session->state, human);
    out["engineReply"] = reply ? move_to_json(*reply) : nlohmann::json(nullptr);
    out["strategy"] = to_string(strategy.kind);
    {
      std::unique_lock lock(mutex_);
      sessions_.emplace(session->id, session);
    }
    return {201, std::move(out)};
  } catch (const nlohmann::json::exception& e) {
    return error(400, e.what());
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  } catch (const std::length_error& e) {
    return error(400, e.what());
  }
}

Response SessionStore::get_state(const std::string& id) {
  auto session = find(id);
  if (!session) return error(404, "unknown or expired session");
  std::lock_guard lock(session->mutex);
  session->touched_at = now();
  return {200, snapshot(session->id, session->state, session->human)};
}

Response SessionStore::post_move(const std::string& id, const nlohmann::json& body) {
  auto session = find(id);
  if (!session) return error(404, "unknown or expired session");
  std::lock_guard lock(session->mutex);
  session->touched_at = now();
  GameState& s = session->state;

  Move move;
  try {
    move = move_from_json(body);
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  }
  auto reject = [&](int status, nlohmann::json why) {
    nlohmann::json out = std::move(why);
    out["accepted"] = false;
    out["engineReply"] = nullptr;
    out["status"] = to_string(s.status());
    out["legalMoves"] = legal_moves_json(s, session->human);
    return Response{status, std::move(out)};
  };
  if (!s.ongoing()) return reject(409, {{"reason", "game is over"}});
  if (s.turn() != session->human) return reject(409, {{"reason", "not your turn"}});
  if (auto rejection = s.check(move)) return reject(422, rejection_to_json(*rejection));

  s = s.apply(move);
  const std::optional<Move> reply = engine_reply(s, session->human, session->engine);
  nlohmann::json out = snapshot(session->id, s, session->human);
  out["accepted"] = true;
  out["reason"] = nullptr;
  out["engineReply"] = reply ? move_to_json(*reply) : nlohmann::json(nullptr);
  return {200, std::move(out)};
}

Response SessionStore::delete_session(const std::string& id) {
  std::unique_lock lock(mutex_);
  if (sessions_.erase(id) == 0) return error(404, "unknown or expired session");
  return {200, {{"deleted", id}}};
}

}  // namespace esd::service
