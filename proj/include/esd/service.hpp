#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "esd/game.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace esd::service {

struct Response {
  int status = 200;
  nlohmann::json body;
};

struct SessionOptions {
  std::chrono::seconds idle_timeout{3600};
  // Injected for tests; defaults to steady_clock::now.
  std::function<std::chrono::steady_clock::time_point()> clock;
};

// In-memory game sessions between a human and an engine strategy. Each
// session serialises its own requests; the store itself is a concurrent map.
class SessionStore {
 public:
  explicit SessionStore(SessionOptions options = {});

  // Body: {"family": "star:5"} or {"graph": {"n":..,"edges":..}}, plus
  // optional "l" (default n), "side" ("Alice"|"Bob", default "Alice"),
  // "strategy" (default "candidate"), "seed", "bobStarts".
  Response create_session(const nlohmann::json& body);
  Response get_state(const std::string& id);
  // Body: {"v": <vertex>, "label": <label>}.
  Response post_move(const std::string& id, const nlohmann::json& body);
  Response delete_session(const std::string& id);

  std::size_t size() const;
  // Drops sessions idle longer than the timeout; returns how many.
  std::size_t expire_idle();

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id);
  std::chrono::steady_clock::time_point now() const;
  std::string fresh_id();

  SessionOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mutex_;
  std::uint64_t id_state_;
};

// Registers the JSON API on server. Static UI assets, if any, are mounted by
// the caller.
void mount_routes(httplib::Server& server, SessionStore& store);

}  // namespace esd::service
