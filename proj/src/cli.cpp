#include "spjlab/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>

#include "spjlab/catalog.hpp"
#include "spjlab/error.hpp"
#include "spjlab/pipeline.hpp"
#include "spjlab/render.hpp"
#include "spjlab/service.hpp"

namespace spjlab {
namespace {

// Plenty for the bundled data; stops a runaway comma-join chain.
constexpr std::size_t kCliMaxRows = 1'000'000;

std::string describe(const QueryError& e) {
  std::string out = "error: " + std::string(to_string(e.kind())) + " error";
  if (e.position()) out += " at " + to_string(*e.position());
  return out + ": " + e.detail() + "\n";
}

std::string trace_text(const RewriteTrace& trace) {
  if (trace.empty()) return "  (no rewrites)\n";
  std::string out;
  for (const auto& step : trace) {
    out += "  " + std::string(to_string(step.rule)) + "  [" +
           (step.at.is_root() ? std::string("root") : step.at.to_dotted()) + "]\n";
  }
  return out;
}

struct ShowArgs {
  std::string sql;
  bool optimize = false;
  std::string format = "unicode";
};

struct EvalArgs {
  std::string sql;
  bool optimize = false;
  std::string node;
};

int run_show(const Catalog& catalog, const ShowArgs& args, bool color, std::ostream& out) {
  const QueryRun run = run_query(args.sql, catalog, args.optimize, {kCliMaxRows});
  if (args.format == "latex") {
    out << to_latex(run.expr) << '\n';
  } else if (args.format == "tree") {
    out << to_tree_text(run.expr, run.results, {color});
  } else {
    out << to_unicode(run.expr) << '\n';
  }
  return kExitOk;
}

int run_eval(const Catalog& catalog, const EvalArgs& args, std::ostream& out, std::ostream& err) {
  const QueryRun run = run_query(args.sql, catalog, args.optimize, {kCliMaxRows});
  NodePath path;
  try {
    path = NodePath::parse_dotted(args.node);
    node_at(run.expr, path);
  } catch (const InvalidPath& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadPath;
  }
  auto it = std::find_if(run.results.begin(), run.results.end(),
                         [&](const EvalResult& r) { return r.path == path; });
  out << node_label(node_at(run.expr, path)) << "\n\n" << to_table_text(it->table);
  return kExitOk;
}

int run_diff(const Catalog& catalog, const std::string& sql, bool color, std::ostream& out) {
  const QueryRun before = run_query(sql, catalog, false, {kCliMaxRows});
  const QueryRun after = run_query(sql, catalog, true, {kCliMaxRows});
  out << "Unoptimized:\n"
      << to_tree_text(before.expr, before.results, {color}) << "\nOptimized:\n"
      << to_tree_text(after.expr, after.results, {color}) << "\nTrace:\n"
      << trace_text(after.trace);
  return kExitOk;
}

int run_relations(const Catalog& catalog, bool json, std::ostream& out) {
  if (json) {
    out << catalog.to_json().dump(2) << '\n';
    return kExitOk;
  }
  bool first = true;
  for (const auto& [name, table] : catalog.relations()) {
    if (!first) out << '\n';
    first = false;
    out << name << "\n\n" << to_table_text(EvalTable{bind_relation(table.schema, name), table.rows});
  }
  out << "\nForeign keys:\n";
  for (const auto& fk : catalog.foreign_keys()) {
    out << "  " << fk.from_relation << '.' << fk.from_attribute << " -> " << fk.to_relation << '.'
        << fk.to_attribute << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translate SQL to relational algebra, optimize it and inspect every step.", "spjlab"};
  app.require_subcommand(1);
  bool color = false;
  app.add_flag("--color", color, "Colorize tree output");

  ShowArgs show;
  auto* show_cmd = app.add_subcommand("show", "Print the relational algebra for a query");
  show_cmd->add_option("sql", show.sql, "SQL query")->required();
  show_cmd->add_flag("--optimize", show.optimize, "Apply predicate pushdown first");
  show_cmd->add_option("--format", show.format, "Output format")
      ->check(CLI::IsMember({"unicode", "latex", "tree"}));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Print the rows produced at one node of the plan");
  eval_cmd->add_option("sql", eval.sql, "SQL query")->required();
  eval_cmd->add_flag("--optimize", eval.optimize, "Evaluate the optimized plan");
  eval_cmd->add_option("--node", eval.node, "Node path as dotted child indices; empty for the root");

  std::string diff_sql;
  auto* diff_cmd = app.add_subcommand("diff", "Show the plan before and after optimization");
  diff_cmd->add_option("sql", diff_sql, "SQL query")->required();

  bool relations_json = false;
  auto* relations_cmd = app.add_subcommand("relations", "List the bundled relations");
  relations_cmd->add_flag("--json", relations_json, "Print the catalog as JSON");

  ServiceConfig service = config_from_env();
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--host", service.host, "Listen address");
  serve_cmd->add_option("--port", service.port, "Listen port (env PORT)");
  serve_cmd->add_option("--static-dir", service.static_dir, "Directory served at / (env STATIC_DIR)");
  serve_cmd->add_option("--max-body-bytes", service.max_body_bytes, "Request size limit (env MAX_BODY_BYTES)");

  // --color is accepted after the subcommand as well.
  for (auto* sub : {show_cmd, diff_cmd}) sub->add_flag("--color", color, "Colorize tree output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUserError;
  }

  const Catalog catalog = load_catalog();
  try {
    if (*show_cmd) return run_show(catalog, show, color, out);
    if (*eval_cmd) return run_eval(catalog, eval, out, err);
    if (*diff_cmd) return run_diff(catalog, diff_sql, color, out);
    if (*relations_cmd) return run_relations(catalog, relations_json, out);
    if (*serve_cmd) {
      out << "listening on " << service.host << ":" << service.port << std::endl;
      if (!serve(catalog, service)) {
        err << "error: cannot listen on " << service.host << ":" << service.port << "\n";
        return 1;
      }
      return kExitOk;
    }
  } catch (const QueryError& e) {
    err << describe(e);
    return kExitUserError;
  } catch (const ResultTooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kExitUserError;
  }
  return kExitOk;
}

}  // namespace spjlab
