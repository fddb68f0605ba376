#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "esd/service.hpp"
#include "httplib.h"

int main(int argc, char** argv) {
  CLI::App app{"HTTP game service for the ESD labeling game", "esd-serve"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  long idle_seconds = 3600;
  app.add_option("--host", host);
  app.add_option("--port", port);
  app.add_option("--static", static_dir, "Directory with the built web UI, served under /");
  app.add_option("--idle-timeout", idle_seconds, "Session idle timeout in seconds");
  CLI11_PARSE(app, argc, argv);

  esd::service::SessionStore store(esd::service::SessionOptions{std::chrono::seconds(idle_seconds), {}});
  httplib::Server server;
  esd::service::mount_routes(server, store);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    std::cerr << "error: cannot serve static files from '" << static_dir << "'\n";
    return 2;
  }
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  return server.listen(host, port) ? 0 : 1;
}
