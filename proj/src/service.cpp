#include "spjlab/service.hpp"

#include <cstdlib>

#include <httplib.h>

#include "spjlab/error.hpp"
#include "spjlab/pipeline.hpp"
#include "spjlab/render.hpp"

namespace spjlab {
namespace {

using nlohmann::ordered_json;

ApiResponse error_response(int status, std::string_view kind, const std::string& message,
                           const std::optional<Position>& position = std::nullopt) {
  ordered_json error = {{"kind", kind}};
  if (position) error["position"] = {{"line", position->line}, {"column", position->column}};
  error["message"] = message;
  return {status, ordered_json{{"ok", false}, {"error", std::move(error)}}.dump()};
}

ordered_json query_json(const QueryRun& run) {
  ordered_json trace = ordered_json::array();
  for (const auto& step : run.trace) {
    trace.push_back({{"rule", to_string(step.rule)}, {"path", step.at.indices()}});
  }
  ordered_json nodes = ordered_json::array();
  for (const auto& result : run.results) {
    nodes.push_back({{"path", result.path.indices()},
                     {"schema", schema_to_json(result.table.schema)},
                     {"rows", rows_to_json(result.table.rows)},
                     {"cardinality", result.cardinality()}});
  }
  return {{"ok", true},
          {"unicode", to_unicode(run.expr)},
          {"latex", to_latex(run.expr)},
          {"tree", to_tree_json(run.expr, run.results)},
          {"trace", std::move(trace)},
          {"nodes", std::move(nodes)}};
}

template <class T>
T env_or(const char* name, T fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  if constexpr (std::is_same_v<T, std::string>) {
    return raw;
  } else {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    return (end != nullptr && *end == '\0') ? static_cast<T>(parsed) : fallback;
  }
}

void send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body, "application/json; charset=utf-8");
}

}  // namespace

ServiceConfig config_from_env() {
  ServiceConfig config;
  config.port = env_or("PORT", config.port);
  config.static_dir = env_or("STATIC_DIR", config.static_dir);
  config.max_body_bytes = env_or("MAX_BODY_BYTES", config.max_body_bytes);
  config.cors_origin = env_or("CORS_ORIGIN", config.cors_origin);
  return config;
}

ApiResponse handle_relations(const Catalog& catalog) { return {200, catalog.to_json().dump()}; }

ApiResponse handle_query(const Catalog& catalog, std::string_view request_body, const ServiceConfig& config) {
  if (request_body.size() > config.max_body_bytes) {
    return error_response(413, "request",
                          "request body exceeds " + std::to_string(config.max_body_bytes) + " bytes");
  }
  const auto request = nlohmann::json::parse(request_body, nullptr, /*allow_exceptions=*/false);
  if (request.is_discarded() || !request.is_object()) {
    return error_response(400, "request", "request body must be a JSON object");
  }
  if (!request.contains("sql") || !request["sql"].is_string()) {
    return error_response(400, "request", "field 'sql' must be a string");
  }
  bool optimize_plan = false;
  if (request.contains("optimize")) {
    if (!request["optimize"].is_boolean()) {
      return error_response(400, "request", "field 'optimize' must be a boolean");
    }
    optimize_plan = request["optimize"].get<bool>();
  }

  try {
    const auto run = run_query(request["sql"].get<std::string>(), catalog, optimize_plan,
                               EvalOptions{config.max_rows_per_node});
    // Replace rather than throw on malformed UTF-8 echoed from user literals.
    return {200, query_json(run).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)};
  } catch (const QueryError& e) {
    return error_response(400, to_string(e.kind()), e.detail(), e.position());
  } catch (const ResultTooLarge& e) {
    return error_response(400, "limit", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

void install_routes(httplib::Server& server, const Catalog& catalog, const ServiceConfig& config) {
  server.set_payload_max_length(config.max_body_bytes);

  server.set_post_routing_handler([origin = config.cors_origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
  });
  server.Options(R"(/api/.*)", [origin = config.cors_origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  server.Get("/api/relations", [&catalog](const httplib::Request&, httplib::Response& res) {
    send(res, handle_relations(catalog));
  });
  server.Post("/api/query", [&catalog, config](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_query(catalog, req.body, config));
  });

  // httplib answers oversize bodies itself before routing; give them the
  // same JSON shape as every other error.
  server.set_error_handler([max = config.max_body_bytes](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 413) {
      send(res, error_response(413, "request", "request body exceeds " + std::to_string(max) + " bytes"));
    } else if (res.status == 404) {
      send(res, error_response(404, "request", "no such endpoint"));
    }
  });

  if (!config.static_dir.empty()) server.set_mount_point("/", config.static_dir);
}

bool serve(const Catalog& catalog, const ServiceConfig& config) {
  httplib::Server server;
  install_routes(server, catalog, config);
  return server.listen(config.host, config.port);
}

}  // namespace spjlab
