#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "spjlab/catalog.hpp"

namespace httplib {
class Server;
}

namespace spjlab {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string static_dir;  // empty: no static files
  std::size_t max_body_bytes = 64 * 1024;
  std::string cors_origin = "*";
  // Upper bound on rows any single plan node may produce.
  std::size_t max_rows_per_node = 100'000;
};

// Overrides defaults from PORT, STATIC_DIR, MAX_BODY_BYTES and CORS_ORIGIN.
ServiceConfig config_from_env();

struct ApiResponse {
  int status = 200;
  std::string body;  // UTF-8 JSON
};

// GET /api/relations
ApiResponse handle_relations(const Catalog& catalog);

// POST /api/query with {"sql": string, "optimize": bool}
ApiResponse handle_query(const Catalog& catalog, std::string_view request_body,
                         const ServiceConfig& config);

// Installs the API routes, CORS headers and the optional static mount.
// `catalog` must outlive the server.
void install_routes(httplib::Server& server, const Catalog& catalog, const ServiceConfig& config);

// Blocks serving until the process is stopped. Returns false if the
// listening socket could not be bound.
bool serve(const Catalog& catalog, const ServiceConfig& config);

}  // namespace spjlab
