#include "esd/service.hpp"
#include "httplib.h"

namespace esd::service {
namespace {

void send(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

nlohmann::json body_of(const httplib::Request& req) {
  if (req.body.empty()) return nlohmann::json::object();
  return nlohmann::json::parse(req.body, nullptr, false);
}

}  // namespace

void mount_routes(httplib::Server& server, SessionStore& store) {
  server.Post("/api/session", [&store](const httplib::Request& req, httplib::Response& res) {
    const auto body = body_of(req);
    if (body.is_discarded()) return send(res, {400, {{"error", "malformed JSON body"}}});
    send(res, store.create_session(body));
  });
  server.Get(R"(/api/session/([0-9a-f]+))", [&store](const httplib::Request& req, httplib::Response& res) {
    send(res, store.get_state(req.matches[1]));
  });
  server.Post(R"(/api/session/([0-9a-f]+)/move)", [&store](const httplib::Request& req, httplib::Response& res) {
    const auto body = body_of(req);
    if (body.is_discarded()) return send(res, {400, {{"error", "malformed JSON body"}}});
    send(res, store.post_move(req.matches[1], body));
  });
  server.Delete(R"(/api/session/([0-9a-f]+))", [&store](const httplib::Request& req, httplib::Response& res) {
    send(res, store.delete_session(req.matches[1]));
  });
}

}  // namespace esd::service
