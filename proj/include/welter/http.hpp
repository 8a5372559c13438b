// Binds PlayService to an httplib server.

#pragma once

#include <string>

#include "httplib.h"
#include "welter/session.hpp"

namespace welter {

inline void send(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

inline json parse_body(const httplib::Request& req, httplib::Response& res, bool& ok) {
  json body = json::parse(req.body, nullptr, false);
  ok = !body.is_discarded() && body.is_object();
  if (!ok) send(res, api_error(400, "request body is not a JSON object"));
  return body;
}

/// Installs the play API; `static_dir` (optional) is served at /.
inline void install_routes(httplib::Server& server, PlayService& service, const std::string& static_dir = "") {
  server.Post("/api/session", [&service](const httplib::Request& req, httplib::Response& res) {
    bool ok = false;
    const json body = parse_body(req, res, ok);
    if (ok) send(res, service.create(body));
  });
  server.Get(R"(/api/session/([A-Za-z0-9_-]+))", [&service](const httplib::Request& req, httplib::Response& res) {
    send(res, service.get(req.matches[1]));
  });
  server.Post("/api/move", [&service](const httplib::Request& req, httplib::Response& res) {
    bool ok = false;
    const json body = parse_body(req, res, ok);
    if (ok) send(res, service.move(body));
  });
  server.Get("/api/hints", [&service](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("id") || !req.has_param("h")) {
      send(res, api_error(400, "hints need id and h"));
      return;
    }
    Nat h = 0;
    try {
      h = std::stoull(req.get_param_value("h"));
    } catch (const std::exception&) {
      send(res, api_error(400, "h must be a natural number"));
      return;
    }
    send(res, service.hints(req.get_param_value("id"), h));
  });
  if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace welter
