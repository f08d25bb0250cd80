#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace intertwine::http {

// Installs every /api route on the server.
void register_routes(httplib::Server& server);

// Port from the PORT environment variable, or `fallback` when unset or invalid.
int port_from_env(int fallback = 8080);

// Blocks serving on host:port. Returns false if the socket could not be bound.
bool serve(const std::string& host, int port);

}  // namespace intertwine::http
